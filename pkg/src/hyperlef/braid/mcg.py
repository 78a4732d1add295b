"""Decision procedures for spherical braid words.

Two quotients matter here.  The mapping class group of the n-marked
sphere is the quotient of the spherical braid group by its center; a
word maps to the trivial mapping class iff its action on the fundamental
group of the punctured sphere (a free group of rank n-1) is an inner
automorphism, and that action is faithful for n >= 3.  The kernel of the
quotient is generated by the full twist, of order two, so a word with
trivial mapping class lies in {1, full twist}: its "lift class".

mcg_image_trivial answers the first question by a tier of increasingly
expensive checks, ending in the exact free-group test.  lift_class
answers the second; it is sound but may return UNDECIDED, since no cheap
complete invariant separates the two central elements for even n.
"""

from __future__ import annotations

import heapq
from collections import deque

from ..errors import NotMcgTrivial
from ._kernel import free_reduce, inverse, power, reduce_concat
from .words import SPHERICAL, BraidWord, degree, full_twist, permutation_of, rim_word

UNKNOWN = "unknown"

TRIVIAL = "Trivial"
FULL_TWIST = "FullTwist"
UNDECIDED = "Undecided"

DEFAULT_BUDGET = 10 ** 6


# ---------------------------------------------------------------------------
# exact test: action on pi_1 of the punctured sphere

def _subst(word, images):
    out = []
    for x in word:
        piece = images[abs(x)]
        if x < 0:
            piece = inverse(piece)
        for y in piece:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


def _gen_action(i: int, sign: int, n: int) -> dict:
    """Automorphism of the free group on loops x1..xn induced by one
    braid generator: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i."""
    im = {j: (j,) for j in range(1, n + 1)}
    if sign > 0:
        im[i] = (i, i + 1, -i)
        im[i + 1] = (i,)
    else:
        im[i] = (i + 1,)
        im[i + 1] = (-(i + 1), i, i + 1)
    return im


def _word_action(letters, n: int) -> dict:
    images = {j: (j,) for j in range(1, n + 1)}
    for x in letters:
        g = _gen_action(abs(x), 1 if x > 0 else -1, n)
        images = {j: _subst(images[j], g) for j in images}
    return images


def _eliminate_last(wrd, n: int):
    """Rewrite into the free group on x1..x_{n-1} using the surface
    relation x1...xn = 1."""
    last = tuple(inverse(range(1, n)))
    out = []
    for x in wrd:
        piece = last if x == n else (inverse(last) if x == -n else (x,))
        for y in piece:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


def _cyclic_split(wrd):
    """w = v C v^-1 with C cyclically reduced; returns (v, C)."""
    w = list(wrd)
    v = []
    while len(w) >= 2 and w[0] == -w[-1]:
        v.append(w[0])
        w = w[1:-1]
    return tuple(v), tuple(w)


def is_mcg_trivial_exact(w: BraidWord) -> bool:
    """Faithful triviality test: the induced automorphism of the free
    group on n-1 loops must be inner."""
    n = w.strands
    if n == 2:
        return degree(w) == 0
    images = _word_action(free_reduce(w.letters), n)
    f = {j: _eliminate_last(images[j], n) for j in range(1, n)}
    v, core = _cyclic_split(f[1])
    if core != (1,):
        return False
    # the conjugating element is u = v x1^k; read k off f(x2)
    w2 = tuple(reduce_concat([inverse(v), f[2], v]))
    # w2 must be x1^k x2 x1^-k
    k = 0
    while k < len(w2) and w2[k] in (1, -1) and (k == 0 or w2[k] == w2[0]):
        k += 1
    if k >= len(w2) or abs(w2[k]) != 2:
        return False
    head = w2[:k]
    if w2 != head + (w2[k],) + tuple(inverse(head)):
        return False
    u = tuple(reduce_concat([v, head]))
    ui = tuple(inverse(u))
    return all(tuple(reduce_concat([ui, f[j], u])) == (j,)
               for j in range(1, n))


# ---------------------------------------------------------------------------
# relation rewriting

def _braid_rewrites(a: int, b: int, c: int):
    """Length-3 rewrites derived from the braid relation, on signed
    letters with adjacent generator indices."""
    out = []
    if abs(abs(a) - abs(b)) != 1:
        return out
    if a == c and (a > 0) == (b > 0):
        out.append((b, a, b))  # sts -> tst and its inverse form
    if a == -c:
        # conjugation forms of sts = tst; one sound rewrite per triple
        if (a > 0) == (b > 0):
            out.append((-b, a, b))  # s t s^-1 -> t^-1 s t
        else:
            out.append((b, -a, -b))  # s t^-1 s^-1 -> t^-1 s^-1 t
    return [r for r in out if r != (a, b, c)]


def _rotations(wrd):
    w = list(wrd)
    return [tuple(w[i:] + w[:i]) for i in range(len(w))]


def _relator_forms(n: int, include_full_twist: bool):
    forms = []
    rim = rim_word(n).letters
    forms += _rotations(rim) + _rotations(tuple(inverse(rim)))
    if include_full_twist:
        ft = full_twist(n).letters
        forms += _rotations(ft) + _rotations(tuple(inverse(ft)))
    # dedupe, deterministic order
    seen = set()
    out = []
    for f in forms:
        if f not in seen:
            seen.add(f)
            out.append(f)
    return out


def _neighbors(wrd, relator_forms):
    """All words one rewriting move away, freely reduced."""
    L = len(wrd)
    out = []
    # far commutation
    for i in range(L - 1):
        a, b = wrd[i], wrd[i + 1]
        if abs(abs(a) - abs(b)) >= 2:
            out.append(wrd[:i] + (b, a) + wrd[i + 2:])
    # braid-relation triples
    for i in range(L - 2):
        for repl in _braid_rewrites(wrd[i], wrd[i + 1], wrd[i + 2]):
            out.append(tuple(reduce_concat([wrd[:i], repl, wrd[i + 3:]])))
    # relator insertion (deletion arises via free reduction)
    for form in relator_forms:
        for i in range(L + 1):
            out.append(tuple(reduce_concat([wrd[:i], form, wrd[i:]])))
    return out


def _search_empty(wrd, n: int, budget: int, include_full_twist: bool,
                  max_len: int | None = None) -> bool:
    """Budgeted best-first search for a rewriting path to the empty word.

    Deterministic: the frontier is ordered by (length, letters).  Returns
    True iff the empty word is reached within the node budget; False
    means "not found", not "nontrivial".
    """
    start = tuple(free_reduce(wrd))
    if not start:
        return True
    forms = _relator_forms(n, include_full_twist)
    if max_len is None:
        max_len = len(start) + n * (n - 1) + 2
    seen = {start}
    heap = [(len(start), start)]
    states = 1  # budget counts distinct states generated
    while heap and states < budget:
        _, cur = heapq.heappop(heap)
        for nxt in _neighbors(cur, forms):
            if not nxt:
                return True
            if len(nxt) > max_len or nxt in seen:
                continue
            seen.add(nxt)
            states += 1
            if states >= budget:
                break
            heapq.heappush(heap, (len(nxt), nxt))
    return False


# Burau-style matrix keys for planar braid group elements.  The oracle
# below walks the group itself, not the words: two representatives of
# the same planar element collapse to one node, so the planar relations
# cost nothing and one search step is exactly one relator application.
# The key is the unreduced Burau representation specialized at a fixed
# unit modulo a prime; specialization can only merge elements, never
# separate equal ones, and the lone merge that would matter (a spurious
# hit on the identity) is re-checked exactly before answering True.

try:  # optional accelerator; the pure path computes identical keys
    import numpy as _np
except ImportError:  # pragma: no cover
    _np = None

_KEY_PRIME = 1048573  # < 2^20: products of sums stay well inside int64
_KEY_T = 3
_KEY_T_INV = pow(_KEY_T, _KEY_PRIME - 2, _KEY_PRIME)


def _mat_id(n: int):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _mat_mul_mod(A, B):
    q = _KEY_PRIME
    Bt = tuple(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) % q
                       for col in Bt) for row in A)


def _gen_matrix(x: int, n: int):
    """Unreduced Burau matrix of one signed generator, specialized."""
    i = abs(x) - 1
    M = [[int(r == c) for c in range(n)] for r in range(n)]
    q = _KEY_PRIME
    if x > 0:
        M[i][i] = (1 - _KEY_T) % q
        M[i][i + 1] = _KEY_T
        M[i + 1][i] = 1
        M[i + 1][i + 1] = 0
    else:
        M[i][i] = 0
        M[i][i + 1] = 1
        M[i + 1][i] = _KEY_T_INV
        M[i + 1][i + 1] = (1 - _KEY_T_INV) % q
    return tuple(tuple(row) for row in M)


def _word_matrix(wrd, n: int):
    M = _mat_id(n)
    for x in wrd:
        M = _mat_mul_mod(M, _gen_matrix(x, n))
    return M


_oracle_cache: dict = {}


def _oracle_tables(n: int):
    """Per-strand-count tables: relator forms, their keys, generator
    keys, and the identity key, in both plain and numpy form."""
    if n in _oracle_cache:
        return _oracle_cache[n]
    forms = _relator_forms(n, include_full_twist=True)
    gens = {x: _gen_matrix(x, n) for x in range(-(n - 1), n) if x}
    fmats = [_word_matrix(f, n) for f in forms]
    if _np is not None:
        gens = {x: _np.array(g, dtype=_np.int64) for x, g in gens.items()}
        fstack = _np.array(fmats, dtype=_np.int64)
        id_key = _np.eye(n, dtype=_np.int64).tobytes()
        tables = (forms, fstack, gens, id_key)
    else:
        tables = (forms, fmats, gens, _mat_id(n))
    _oracle_cache[n] = tables
    return tables


def _node_neighbor_keys(rep, n: int):
    """Yield (key, form, position) for every one-relator neighbor."""
    forms, fmats, gens, _ = _oracle_tables(n)
    L = len(rep)
    if _np is not None:
        q = _KEY_PRIME
        prefix = _np.empty((L + 1, n, n), dtype=_np.int64)
        suffix = _np.empty((L + 1, n, n), dtype=_np.int64)
        prefix[0] = _np.eye(n, dtype=_np.int64)
        suffix[L] = _np.eye(n, dtype=_np.int64)
        for i, x in enumerate(rep):
            prefix[i + 1] = prefix[i] @ gens[x] % q
            y = rep[L - 1 - i]
            suffix[L - 1 - i] = gens[y] @ suffix[L - i] % q
        for i in range(L + 1):
            keys = prefix[i] @ fmats % q @ suffix[i] % q
            for f in range(len(forms)):
                yield keys[f].tobytes(), forms[f], i
    else:  # pragma: no cover - exercised only without numpy
        prefix = [_mat_id(n)]
        for x in rep:
            prefix.append(_mat_mul_mod(prefix[-1], gens[x]))
        suffix = [_mat_id(n)]
        for x in reversed(rep):
            suffix.append(_mat_mul_mod(gens[x], suffix[-1]))
        suffix.reverse()
        for i in range(L + 1):
            for f, fmat in enumerate(fmats):
                yield (_mat_mul_mod(_mat_mul_mod(prefix[i], fmat),
                                    suffix[i]), forms[f], i)


def bfs_trivial(w: BraidWord, depth: int = 8,
                node_cap: int = 10_000) -> bool:
    """Brute-force relation closure in the finitely presented group:
    does multiplying in at most ``depth`` defining relators (the rim
    relation and the full twist, conjugated anywhere into the word)
    reach the identity?

    This is the independent oracle the engine's tiered decision is
    tested against on small strand counts and short words.  Two sound
    cuts keep it small: relator multiplication preserves the induced
    permutation and the degree class, so words nontrivial in either
    quotient are rejected outright.  A hit on the identity key is
    confirmed with the exact action before answering True.
    """
    start = tuple(free_reduce(w.letters))
    if not start:
        return True
    n = w.strands
    if permutation_of(w) != tuple(range(n)):
        return False
    ab = (n - 1) * (2 if n % 2 == 0 else 1)
    if degree(w) % ab != 0:
        return False

    _, _, _, id_key = _oracle_tables(n)
    max_len = len(start) + 2 * n * (n - 1)
    seen = set()
    frontier = [start]
    visited = 0
    for _ in range(depth):
        nxt = []
        for rep in frontier:
            visited += 1
            if visited > node_cap:
                return False
            for key, form, i in _node_neighbor_keys(rep, n):
                if key in seen:
                    continue
                if key == id_key:
                    rep2 = tuple(reduce_concat([rep[:i], form, rep[i:]]))
                    if is_mcg_trivial_exact(BraidWord(n, SPHERICAL, rep2)):
                        return True
                    continue  # pragma: no cover - key collision
                rep2 = tuple(reduce_concat([rep[:i], form, rep[i:]]))
                if len(rep2) > max_len:
                    continue
                seen.add(key)
                nxt.append(rep2)
        frontier = nxt
    return False


# ---------------------------------------------------------------------------
# tiered decision

def mcg_image_trivial(w: BraidWord, budget: int = DEFAULT_BUDGET,
                      exact_fallback: bool = True):
    """Is the mapping class of this spherical braid word trivial?

    Tiers: permutation, degree in the abelianization, bounded rewrite
    search, and finally the exact free-group action test.  Returns True,
    False, or UNKNOWN (only possible when the exact fallback is disabled
    and the search budget runs out).
    """
    if w.ambient != SPHERICAL:
        raise ValueError("mapping class decision needs a spherical word")
    n = w.strands
    if permutation_of(w) != tuple(range(n)):
        return False
    # abelianization of the quotient group is cyclic of this order
    ab = (n - 1) * (2 if n % 2 == 0 else 1)
    if degree(w) % ab != 0:
        return False
    if n == 2:
        return True  # degree is a complete invariant on 2 strands
    reduced = free_reduce(w.letters)
    if exact_fallback:
        # short words: give the cheap rewrite search a small slice first
        if len(reduced) <= 12 and _search_empty(
                reduced, n, min(budget, 20_000), include_full_twist=True):
            return True
        return is_mcg_trivial_exact(w)
    if _search_empty(reduced, n, budget, include_full_twist=True):
        return True
    return UNKNOWN


# ---------------------------------------------------------------------------
# lift class

def _structure_matches(wrd, structure) -> bool:
    parts = []
    for base, conj in structure:
        parts += [inverse(conj), base, conj]
    return tuple(reduce_concat(parts)) == tuple(free_reduce(wrd))


def lift_class(w: BraidWord, structure=None,
               budget: int = DEFAULT_BUDGET) -> str:
    """Which central element is this mapping-class-trivial word: the
    identity or the full twist?

    ``structure`` is optional factorization-shape metadata: a sequence of
    (base letters, conjugator letters) blocks whose conjugated
    concatenation equals the word.  Adjacent equal blocks are handled by
    the square rule: u.u with u mapping-class trivial is always the
    identity, since both central elements square to 1; conjugation does
    not change the class.  Without usable structure, a budgeted rewrite
    search runs in the spherical braid group presentation (no central
    quotient) toward the empty word and toward the full twist.  Sound but
    incomplete: may return UNDECIDED, never a wrong class.
    """
    n = w.strands
    verdict = mcg_image_trivial(w, budget=budget)
    if verdict is not True:
        raise NotMcgTrivial("lift class is only defined for words with "
                            "trivial mapping class")
    reduced = tuple(free_reduce(w.letters))
    if not reduced:
        return TRIVIAL
    ft = full_twist(n).letters
    if reduced == ft:
        return FULL_TWIST

    if structure and _structure_matches(w.letters, structure):
        blocks = [(tuple(free_reduce(base)), tuple(free_reduce(conj)))
                  for base, conj in structure]
        if len(blocks) % 2 == 0:
            classes = []
            for i in range(0, len(blocks), 2):
                if blocks[i] != blocks[i + 1]:
                    classes.append(UNDECIDED)
                    continue
                base, _conj = blocks[i]
                sub = BraidWord(n, SPHERICAL, base)
                if mcg_image_trivial(sub, budget=budget) is True:
                    classes.append(TRIVIAL)  # square rule
                else:
                    classes.append(UNDECIDED)
            if all(c == TRIVIAL for c in classes):
                return TRIVIAL

    # unstructured: decide inside the braid group itself (rim relation
    # only; the full twist is not a relator there)
    half = max(budget // 2, 1)
    if _search_empty(reduced, n, half, include_full_twist=False):
        return TRIVIAL
    shifted = reduce_concat([reduced, inverse(ft)])
    if _search_empty(shifted, n, half, include_full_twist=False):
        return FULL_TWIST
    return UNDECIDED
