"""Derive the genus-2 curve table shipped with the package.

Searches for four half-twist/separating-twist data sets (c1..c4) and a
twisting curve c on the 6-marked sphere such that the product
(c1 c2 c3 c4)^2 is trivial in the marked-sphere mapping class group, and
such that the induced homology vectors on the genus-2 double cover satisfy
the constraint system used by the test suite.

Triviality in MCG(S^2, 6) is decided faithfully via the action on
pi_1(S^2 minus 6 points) = F5 (outer-automorphism test).
"""

from __future__ import annotations

import itertools
import json
import sys
from fractions import Fraction

N = 6  # marked points
GENS = (1, 2, 3, 4, 5)

# ---------------------------------------------------------------------------
# free group words: tuples of nonzero ints, generator k is x_k


def red(w):
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inv(w):
    return tuple(-x for x in reversed(w))


def conc(*ws):
    out = []
    for w in ws:
        for x in w:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


# ---------------------------------------------------------------------------
# braid generator automorphisms of F6 = <x1..x6>:
#   sigma_i: x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i

def gen_images(i, sign):
    im = {j: (j,) for j in range(1, N + 1)}
    if sign > 0:
        im[i] = (i, i + 1, -i)
        im[i + 1] = (i,)
    else:
        im[i] = (i + 1,)
        im[i + 1] = (-(i + 1), i, i + 1)
    return im


GEN_IMAGES = {}
for i in range(1, N):
    GEN_IMAGES[i] = gen_images(i, +1)
    GEN_IMAGES[-i] = gen_images(i, -1)


def subst(word, images):
    out = []
    for x in word:
        piece = images[abs(x)]
        if x < 0:
            piece = inv(piece)
        for y in piece:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


def phi_of_word(bw):
    """Images of x1..x6 under the automorphism induced by braid word bw."""
    images = {j: (j,) for j in range(1, N + 1)}
    for letter in bw:
        g = GEN_IMAGES[letter]
        images = {j: subst(images[j], g) for j in images}
    return images


def eliminate_x6(w):
    """Substitute x6 = (x1 x2 x3 x4 x5)^-1 and reduce (F5 word)."""
    x6 = inv((1, 2, 3, 4, 5))
    out = []
    for x in w:
        piece = x6 if x == 6 else (inv(x6) if x == -6 else (x,))
        for y in piece:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


def cyc_split(w):
    """w = v C v^-1 with C cyclically reduced; return (v, C)."""
    v = []
    w = list(w)
    while len(w) >= 2 and w[0] == -w[-1]:
        v.append(w[0])
        w = w[1:-1]
    return tuple(v), tuple(w)


def is_outer_trivial(bw):
    """Faithful triviality test in MCG(S^2, 6) for braid word bw."""
    images = phi_of_word(bw)
    f = {j: eliminate_x6(images[j]) for j in range(1, N)}  # x1..x5
    # need u in F5 with f(xj) = u xj u^-1 for all j
    v, core = cyc_split(f[1])
    if core != (1,):
        return False
    # u = v * x1^k for some k; determine k from x2
    w2 = red(conc(inv(v), f[2], v))
    # w2 must equal x1^k x2 x1^-k
    k = 0
    ok = False
    for kk in range(-40, 41):
        cand = red(conc((1,) * kk if kk >= 0 else (-1,) * (-kk), (2,),
                        (-1,) * kk if kk >= 0 else (1,) * (-kk)))
        if cand == w2:
            k, ok = kk, True
            break
    if not ok:
        return False
    upow = (1,) * k if k >= 0 else (-1,) * (-k)
    u = red(conc(v, upow))
    for j in range(1, N):
        if red(conc(inv(u), f[j], u)) != (j,):
            return False
    return True


# ---------------------------------------------------------------------------
# permutation and homology (genus-2 transvection) prefilters

def perm_of_word(bw):
    p = list(range(N))
    for letter in bw:
        i = abs(letter) - 1
        tr = list(range(N))
        tr[i], tr[i + 1] = tr[i + 1], tr[i]
        p = [tr[x] for x in p]
    return tuple(p)


# chain curve homology classes in basis (a1, b1, a2, b2)
Z = {
    1: (1, 0, 0, 0),
    2: (0, 1, 0, 0),
    3: (1, 0, 1, 0),
    4: (0, 0, 0, 1),
    5: (0, 0, 1, 0),
}


def pair(u, v):
    return (u[0] * v[1] - u[1] * v[0]) + (u[2] * v[3] - u[3] * v[2])


def tmat(v):
    cols = []
    for j in range(4):
        e = [0, 0, 0, 0]
        e[j] = 1
        w = [e[t] + pair(e, v) * v[t] for t in range(4)]
        cols.append(w)
    # cols[j] = T e_j; matrix rows
    return tuple(tuple(cols[j][i] for j in range(4)) for i in range(4))


def matmul(A, B):
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(4)) for j in range(4))
                 for i in range(4))


def matinv_int(A):
    # unimodular integer matrix inverse via fractions
    n = 4
    M = [[Fraction(A[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        pv = M[col][col]
        M[col] = [x / pv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return tuple(tuple(int(M[i][j + n]) for j in range(n)) for i in range(n))


I4 = tuple(tuple(int(i == j) for j in range(4)) for i in range(4))
NEG_I4 = tuple(tuple(-x for x in row) for row in I4)

TGEN = {i: tmat(Z[i]) for i in range(1, 6)}


def hmat_of_word(bw):
    M = I4
    for letter in bw:
        T = TGEN[abs(letter)]
        if letter < 0:
            T = matinv_int(T)
        M = matmul(T, M)
    return M


def vector_of_halftwist_mat(M):
    """Extract primitive +-v from transvection matrix M = I + v<.,v>."""
    D = [[M[i][j] - int(i == j) for j in range(4)] for i in range(4)]
    col = None
    for j in range(4):
        c = [D[i][j] for i in range(4)]
        if any(c):
            col = c
            break
    if col is None:
        return None
    from math import gcd
    g = 0
    for x in col:
        g = gcd(g, abs(x))
    v = tuple(x // g for x in col)
    # verify
    if tmat(v) != M:
        return None
    return v


# ---------------------------------------------------------------------------

def compose_perm(p, q):
    """apply p then q"""
    return tuple(q[p[i]] for i in range(N))


def perm_inv(p):
    out = [0] * N
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def main():
    # --- self checks -------------------------------------------------------
    rim = tuple(list(range(1, 6)) + list(range(5, 0, -1)))
    D = (1, 2, 3, 4, 5)
    full_twist = D * 6
    assert is_outer_trivial(()), "empty word"
    assert is_outer_trivial(rim), "rim relation"
    assert is_outer_trivial(full_twist), "full twist"
    assert not is_outer_trivial((1,)), "sigma_1 nontrivial"
    assert not is_outer_trivial(D * 3), "D^3 nontrivial"
    chain = (1, 2, 3) * 4 + (-5, -5)
    assert is_outer_trivial(chain), "3-chain relation"
    # homology: rim word acts as -I (hyperelliptic involution upstairs)
    assert hmat_of_word(rim) == NEG_I4, "rim acts as -I upstairs"
    print("self-checks passed", flush=True)

    # --- candidate half twists --------------------------------------------
    cands = {}  # key -> (word, perm, hmat)
    pool = [()]
    for L in (1, 2, 3, 4):
        pool += list(itertools.product([1, -1, 2, -2, 3, -3, 4, -4, 5, -5],
                                       repeat=L))
    seen = set()
    for w in pool:
        bw = red(conc(w, (1,), inv(w)))
        p = perm_of_word(bw)
        M = hmat_of_word(bw)
        key = (p, M)
        if key in seen:
            continue
        seen.add(key)
        v = vector_of_halftwist_mat(M)
        if v is None:
            continue
        if max(abs(x) for x in v) > 2:
            continue
        cands.setdefault(key, (bw, p, M, v))
    print(f"{len(cands)} candidate half twists", flush=True)

    by_key = cands
    targetM = hmat_of_word(D * 3)
    targetP = perm_of_word(D * 3)

    sep_pool = [()]
    sep_pool += [(i,) for i in (1, -1, 2, -2, 3, -3, 4, -4, 5, -5)]
    sep_pool += list(itertools.product([1, -1, 2, -2, 3, -3, 4, -4, 5, -5],
                                       repeat=2))
    sep_words = []
    sep_seen = set()
    for w in sep_pool:
        sw = red(conc(w, (1, 2) * 6, inv(w)))
        p = perm_of_word(sw)
        if p != tuple(range(N)):
            continue
        if sw in sep_seen:
            continue
        sep_seen.add(sw)
        sep_words.append(sw)
    print(f"{len(sep_words)} candidate separating twists", flush=True)

    items = list(by_key.values())

    solutions = []
    checked = 0
    for (w1, p1, M1, v1) in items:
        for (w2, p2, M2, v2) in items:
            p12 = compose_perm(p1, p2)
            M21 = matmul(M2, M1)
            for (w3, p3, M3, v3) in items:
                # perm of x1 x2 x3 must be an involution (S is pure)
                p = compose_perm(p12, p3)
                if compose_perm(p, p) != tuple(range(N)):
                    continue
                if p == tuple(range(N)):
                    continue
                # homology constraint (i): (T3 T2 T1)^2 = I, nontrivially
                MM = matmul(M3, M21)
                if matmul(MM, MM) != I4:
                    continue
                # constraint (ii)-ish: rank of span{v1,v2,v3} should be 2
                # (cheap necessary check: all pairwise dets of a basis...)
                for sw in sep_words:
                    checked += 1
                    word = conc(w1, w2, w3, sw)
                    if is_outer_trivial(conc(word, word)):
                        solutions.append((w1, w2, w3, sw, v1, v2, v3))
                        print("SOLUTION", (w1, w2, w3, sw, v1, v2, v3),
                              flush=True)
                        if len(solutions) >= 8:
                            report(solutions)
                            return
    print("full checks run:", checked)
    report(solutions)


def report(solutions):
    print(f"{len(solutions)} solutions")
    with open("/tmp/curve_solutions.json", "w") as fh:
        json.dump([[list(map(list, s[:4])), list(map(list, s[4:]))]
                   for s in solutions], fh, indent=1)


if __name__ == "__main__":
    main()
