# cython: language_level=3
"""Compiled word kernel: concatenation with free cancellation at seams.

Same contract as _pure.py; selected automatically at import when built.
"""

IMPLEMENTATION = "compiled"


def reduce_concat(words):
    cdef list out = []
    cdef Py_ssize_t top
    cdef long x, last
    for w in words:
        for xi in w:
            x = xi
            top = len(out)
            if top and <long> out[top - 1] == -x:
                del out[top - 1]
            else:
                out.append(xi)
    return out


def free_reduce(word):
    return reduce_concat((word,))
