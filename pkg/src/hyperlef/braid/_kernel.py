"""Select the word kernel: compiled extension if built, else pure Python.

Set HYPERLEF_PURE=1 to force the pure fallback (used by the benchmark
and by tests that compare the two).
"""

from __future__ import annotations

import os

if os.environ.get("HYPERLEF_PURE"):
    from . import _pure as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _pure as _impl

IMPLEMENTATION: str = _impl.IMPLEMENTATION
reduce_concat = _impl.reduce_concat
free_reduce = _impl.free_reduce


def inverse(word) -> list:
    return [-x for x in reversed(word)]


def power(word, n: int) -> list:
    if n < 0:
        return reduce_concat([inverse(word)] * (-n))
    return reduce_concat([word] * n)
