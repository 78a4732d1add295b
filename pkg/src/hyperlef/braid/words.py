"""Braid words on the plane and on the sphere.

Words multiply in factorization order: the first letter acts first.
Consequently the permutation of a product composes first-then-second,
and the homology action of a word is the matrix product with the first
letter's matrix rightmost.

Distinguished lifts of Dehn twists to the spherical braid group on
n = 2g+2 strands: a nonseparating twist lifts to a conjugate of the
first generator, a separating twist of side genus h to a conjugate of
(sigma_1 ... sigma_2h)^(4h+2).  The conjugating braid is positional
data the caller supplies; the engine never reads it off a picture.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import GenusMismatch, MissingLiftData
from ._kernel import inverse, power, reduce_concat

PLANAR = "planar"
SPHERICAL = "spherical"


@dataclass(frozen=True)
class BraidWord:
    strands: int
    ambient: str  # PLANAR or SPHERICAL
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("need at least 2 strands")
        if self.ambient not in (PLANAR, SPHERICAL):
            raise ValueError(f"unknown ambient {self.ambient!r}")
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(
                    f"generator index {x} out of range for {self.strands} strands")

    def __len__(self):
        return len(self.letters)


def word(letters, strands: int, ambient: str = SPHERICAL) -> BraidWord:
    return BraidWord(strands=strands, ambient=ambient, letters=tuple(letters))


def concat(*ws: BraidWord) -> BraidWord:
    first = ws[0]
    for w in ws[1:]:
        if w.strands != first.strands or w.ambient != first.ambient:
            raise ValueError("cannot concatenate words of different type")
    return BraidWord(first.strands, first.ambient,
                     tuple(reduce_concat([w.letters for w in ws])))


def free_reduced(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, w.ambient, tuple(reduce_concat([w.letters])))


def braid_inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, w.ambient, tuple(inverse(w.letters)))


def braid_power(w: BraidWord, n: int) -> BraidWord:
    return BraidWord(w.strands, w.ambient, tuple(power(w.letters, n)))


def permutation_of(w: BraidWord) -> tuple[int, ...]:
    """Image in the symmetric group; entry i is where position i ends up
    (0-based), first letter applied first."""
    n = w.strands
    p = list(range(n))
    for x in w.letters:
        i = abs(x) - 1
        for j in range(n):
            if p[j] == i:
                p[j] = i + 1
            elif p[j] == i + 1:
                p[j] = i
    return tuple(p)


def degree(w: BraidWord) -> int:
    """Signed letter count; on the sphere, reduced mod 2(n-1)."""
    d = sum(1 if x > 0 else -1 for x in w.letters)
    if w.ambient == SPHERICAL:
        d %= 2 * (w.strands - 1)
    return d


def full_twist(strands: int, ambient: str = SPHERICAL) -> BraidWord:
    return BraidWord(strands, ambient,
                     tuple(range(1, strands)) * strands)


def rim_word(strands: int) -> BraidWord:
    letters = tuple(range(1, strands)) + tuple(range(strands - 1, 0, -1))
    return BraidWord(strands, SPHERICAL, letters)


def _lift_core(curve) -> tuple[int, ...]:
    if curve.separating:
        h = curve.h
        return tuple(range(1, 2 * h + 1)) * (4 * h + 2)
    return (1,)


def distinguished_lift(letter, conjugator: BraidWord) -> BraidWord:
    """Canonical spherical-braid preimage of one twist letter.

    Returns w . core . w^-1 where core is sigma_1 (nonseparating) or
    (sigma_1 ... sigma_2h)^(4h+2) (separating side genus h) and w is the
    supplied positional conjugator on 2g+2 strands.
    """
    curve = getattr(letter, "curve", letter)
    n = 2 * curve.genus + 2
    if conjugator.strands != n:
        raise GenusMismatch(
            f"lift needs {n} strands, conjugator has {conjugator.strands}")
    if conjugator.ambient != SPHERICAL:
        raise GenusMismatch("lift conjugator must be spherical")
    core = _lift_core(curve)
    letters = reduce_concat([conjugator.letters, core,
                             inverse(conjugator.letters)])
    return BraidWord(n, SPHERICAL, tuple(letters))


def letter_lift(twist_letter, lift_data: dict) -> BraidWord:
    """Full lift of a twist letter, curve-level conjugator chain included.

    ``lift_data`` maps curve id to positional conjugator letters.  The
    chain lifts to the word D concatenated in application order (last
    chain entry first); the result is D^-1 . base . D, whose induced
    homology action matches the expanded transvection of the letter.
    """
    curve = twist_letter.curve
    n = 2 * curve.genus + 2

    def conj_of(c) -> BraidWord:
        try:
            raw = lift_data[c.id]
        except KeyError:
            raise MissingLiftData(f"no lift conjugator for curve {c.id!r}") from None
        return word(raw, n)

    base = distinguished_lift(twist_letter, conj_of(curve))
    chain_parts = []
    for d, p in reversed(twist_letter.conjugator):
        chain_parts.append(power(distinguished_lift(d, conj_of(d)).letters, p))
    if not chain_parts:
        return base
    D = reduce_concat(chain_parts)
    letters = reduce_concat([inverse(D), base.letters, D])
    return BraidWord(n, SPHERICAL, tuple(letters))


def global_braid_monodromy(spec, lift_data: dict) -> BraidWord:
    """Concatenated distinguished lifts of all letters, in factorization
    order, freely reduced."""
    n = 2 * spec.genus + 2
    parts = [letter_lift(letter, lift_data).letters for letter in spec.letters]
    return BraidWord(n, SPHERICAL, tuple(reduce_concat(parts)))
