"""Build hook: compile the optional word-calculus speedup extension.

The package is fully functional without the extension; a pure-Python
fallback is selected at import time if the compiled module is absent.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/hyperlef/braid/_speedups.pyx"],
        language_level=3,
    )
except Exception:
    pass  # no cython at build time: ship pure python

setup(ext_modules=ext_modules)
