"""Integer symplectic linear algebra over the surface homology lattice.

Transvections (the H1-action of a Dehn twist), products of transvections
in factorization order, and first homology of total spaces as the
cokernel of the vanishing-cycle matrix, diagonalized by an exact Smith
normal form.  Everything is arbitrary-precision integer arithmetic;
matrices are tuples of row tuples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DimensionMismatch, NoSection

Matrix = tuple[tuple[int, ...], ...]


def symplectic_pairing(u, v, g: int) -> int:
    """<u, v> in the standard block form on the basis a1, b1, ..., ag, bg."""
    if len(u) != 2 * g or len(v) != 2 * g:
        raise DimensionMismatch(
            f"expected vectors of length {2 * g}, got {len(u)} and {len(v)}")
    total = 0
    for i in range(g):
        total += u[2 * i] * v[2 * i + 1] - u[2 * i + 1] * v[2 * i]
    return total


def transvect(c, x, n: int) -> tuple[int, ...]:
    """Picard-Lefschetz action of tau_c^n on x:  x + n <x, c> c.

    ``c`` may be a CurveClass or a raw vector.  Separating curves have
    zero class, so their twists act trivially.
    """
    v = getattr(c, "vector", c)
    g, rem = divmod(len(v), 2)
    if rem or len(x) != len(v):
        raise DimensionMismatch(
            f"vector lengths {len(v)} and {len(x)} are not a common 2g")
    coeff = n * symplectic_pairing(x, v, g)
    return tuple(xi + coeff * vi for xi, vi in zip(x, v))


def transvection_matrix(v, n: int = 1) -> Matrix:
    """Matrix of x -> x + n <x, v> v in the standard basis (as column action)."""
    dim = len(v)
    cols = []
    for j in range(dim):
        e = tuple(int(t == j) for t in range(dim))
        cols.append(transvect(v, e, n))
    return tuple(tuple(cols[j][i] for j in range(dim)) for i in range(dim))


def identity_matrix(dim: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim))


def is_identity(M: Matrix) -> bool:
    return M == identity_matrix(len(M))


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if len(A[0]) != len(B):
        raise DimensionMismatch("inner dimensions differ")
    Bt = tuple(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt)
                 for row in A)


def expanded_vector(letter) -> tuple[int, ...]:
    """Homology class of a twist letter with its conjugator chain applied.

    Chain entries compose outside-in: the last entry acts on the curve
    first, the first entry last, so prepending an entry wraps the whole
    letter in one more twist.
    """
    v = letter.curve.vector
    for d, p in reversed(letter.conjugator):
        v = transvect(d, v, p)
    return v


def factorization_h1_action(spec) -> Matrix:
    """Product of the letter transvections in factorization order.

    The first letter acts first, so its matrix sits rightmost in the
    product.
    """
    M = identity_matrix(2 * spec.genus)
    for letter in spec.letters:
        M = mat_mul(transvection_matrix(expanded_vector(letter)), M)
    return M


# ---------------------------------------------------------------------------
# Smith normal form

@dataclass(frozen=True)
class SmithForm:
    D: Matrix
    U: Matrix
    V: Matrix
    invariant_factors: tuple[int, ...]


def _det_unimodular(M: Matrix) -> int:
    """Determinant by fraction-free Gaussian elimination (Bareiss)."""
    n = len(M)
    a = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def smith_normal_form(M: Matrix) -> SmithForm:
    """Diagonalize M over the integers: U M V = D with U, V unimodular.

    Pivot choice is the smallest nonzero magnitude in the working block,
    which keeps intermediate entries from swelling on the matrix sizes
    this engine meets.
    """
    rows = len(M)
    cols = len(M[0]) if rows else 0
    A = [list(r) for r in M]
    U = [list(r) for r in identity_matrix(rows)]
    V = [list(r) for r in identity_matrix(cols)]

    def row_op(i, j, q):  # row_i -= q * row_j
        A[i] = [a - q * b for a, b in zip(A[i], A[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in range(rows):
            A[r][i] -= q * A[r][j]
        for r in range(cols):
            V[r][i] -= q * V[r][j]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in range(rows):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        for r in range(cols):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    t = 0
    while t < min(rows, cols):
        # pick the entry of least nonzero magnitude as pivot
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if A[i][j] and (best is None or abs(A[i][j]) < best[0]):
                    best = (abs(A[i][j]), i, j)
        if best is None:
            break
        _, pi, pj = best
        swap_rows(t, pi)
        swap_cols(t, pj)
        # clear row and column t; pivot shrinks each pass, so this terminates
        while True:
            dirty = False
            for i in range(t + 1, rows):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    row_op(i, t, q)
                    if A[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    col_op(j, t, q)
                    if A[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                break
        # pivot must divide the remaining block
        p = A[t][t]
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if A[i][j] % p:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_op(t, offender, -1)  # fold the offending row in and redo
            continue
        t += 1

    for i in range(min(rows, cols)):
        if A[i][i] < 0:
            A[i] = [-x for x in A[i]]
            U[i] = [-x for x in U[i]]

    D = tuple(tuple(r) for r in A)
    Ut = tuple(tuple(r) for r in U)
    Vt = tuple(tuple(r) for r in V)
    factors = tuple(A[i][i] for i in range(min(rows, cols)))
    assert abs(_det_unimodular(Ut)) == 1 and abs(_det_unimodular(Vt)) == 1
    return SmithForm(D=D, U=Ut, V=Vt, invariant_factors=factors)


# ---------------------------------------------------------------------------
# abelian groups and first homology

@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group: Z^rank + cyclic torsion factors
    listed in divisibility order."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion factors must form a divisibility chain")
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion factors must be >= 2")

    def __str__(self):
        parts = ["Z"] * self.rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def cokernel(M: Matrix) -> AbelianGroup:
    """Z^rows / (column span of M)."""
    rows = len(M)
    if rows == 0:
        return AbelianGroup(rank=0)
    if not M[0]:
        return AbelianGroup(rank=rows)
    factors = smith_normal_form(M).invariant_factors
    nonzero = [d for d in factors if d]
    return AbelianGroup(rank=rows - len(nonzero),
                        torsion=tuple(d for d in nonzero if d > 1))


def first_homology(spec) -> AbelianGroup:
    """H1 of the total space: Z^2g modulo the expanded vanishing-cycle span.

    Valid only when the fibration has a section; separating letters
    contribute zero columns (their class vanishes) but are kept so the
    matrix shape mirrors the letter list.
    """
    if not spec.has_section:
        raise NoSection("first homology computation requires a section")
    g = spec.genus
    vectors = [expanded_vector(letter) for letter in spec.letters]
    if not vectors:
        return AbelianGroup(rank=2 * g)
    M = tuple(tuple(v[i] for v in vectors) for i in range(2 * g))
    return cokernel(M)


def chain_classes(g: int) -> tuple[tuple[int, ...], ...]:
    """Homology classes of the standard chain of 2g+1 curves whose twists
    generate the hyperelliptic mapping classes: a1, b1, a1+a2, b2,
    a2+a3, ..., bg, ag."""
    dim = 2 * g
    out = []

    def basis(i):
        e = [0] * dim
        e[i] = 1
        return e

    for i in range(1, g + 1):
        ai = basis(2 * i - 2)
        if i == 1:
            out.append(tuple(ai))
        out.append(tuple(basis(2 * i - 1)))  # b_i
        nxt = basis(2 * i) if i < g else [0] * dim
        out.append(tuple(x + y for x, y in zip(ai, nxt)))  # a_i + a_{i+1}
    return tuple(out)


def braid_word_h1_action(letters, g: int) -> Matrix:
    """H1-action of a spherical braid word on 2g+2 strands, via the
    transvections along the chain classes; first letter acts first."""
    chain = chain_classes(g)
    M = identity_matrix(2 * g)
    for x in letters:
        v = chain[abs(x) - 1]
        M = mat_mul(transvection_matrix(v, 1 if x > 0 else -1), M)
    return M


def minors_gcd_invariant_factors(M: Matrix) -> tuple[int, ...]:
    """Brute-force oracle: d1...dk via gcds of k x k minors.

    Exponential; only for cross-checking smith_normal_form on small
    matrices.
    """
    from itertools import combinations

    rows = len(M)
    cols = len(M[0]) if rows else 0
    k = min(rows, cols)

    def minor(rs, cs):
        sub = [[M[i][j] for j in cs] for i in rs]
        return _det_unimodular(tuple(tuple(r) for r in sub))

    gcds = [1]
    for size in range(1, k + 1):
        g = 0
        for rs in combinations(range(rows), size):
            for cs in combinations(range(cols), size):
                g = math.gcd(g, minor(rs, cs))
        gcds.append(g)
    factors = []
    for size in range(1, k + 1):
        if gcds[size] == 0:
            factors.append(0)
        else:
            factors.append(gcds[size] // gcds[size - 1])
    return tuple(factors)
