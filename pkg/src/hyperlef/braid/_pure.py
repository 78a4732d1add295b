"""Pure-Python word kernel: concatenation with free cancellation at seams.

Words are sequences of nonzero signed integers; letter k is the k-th
generator, -k its inverse.  The compiled twin in _speedups.pyx exposes
the same functions.
"""

from __future__ import annotations

IMPLEMENTATION = "pure"


def reduce_concat(words) -> list:
    """Concatenate words and freely reduce; amortized O(total length)."""
    out = []
    for w in words:
        for x in w:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return out


def free_reduce(word) -> list:
    return reduce_concat((word,))
