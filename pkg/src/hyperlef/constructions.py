"""Builders and operations on fibration specs: fiber sum, the n-fold
twisting deformation, the genus-2 demo family, and end-to-end analysis.

The shipped curve table carries homology vectors and braid-lift
positional data for five genus-2 curves.  The vectors are not invented
constants: tools/derive_curve_table.py searches for them against the
constraint system re-verified here by verify_curve_table, and any
satisfying assignment would do.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from importlib import resources

from . import homology, invariants, sixfold
from .braid import mcg, words
from .errors import (
    GenusMismatch,
    InvariantViolation,
    LiftNotTrivial,
    LiftUndecided,
    MissingLiftData,
    NotMcgTrivial,
)
from .model import BlockInfo, CurveClass, FibrationSpec, Provenance, TwistLetter
from .model import count_reducible


@dataclass(frozen=True)
class CurveTable:
    genus: int
    curves: dict  # id -> CurveClass
    lift_conjugators: dict  # id -> tuple of signed ints

    def curve(self, cid: str) -> CurveClass:
        return self.curves[cid]


def load_curve_table() -> CurveTable:
    raw = json.loads(
        resources.files("hyperlef.data").joinpath("curve_table.json")
        .read_text())
    g = raw["genus"]
    curves = {}
    for entry in raw["curves"]:
        c = CurveClass(id=entry["id"], genus=g, kind=entry["kind"],
                       vector=tuple(entry["vector"]), h=entry.get("h"))
        c.validate()
        curves[c.id] = c
    lifts = {cid: tuple(ws) for cid, ws in raw["lift_conjugators"].items()}
    return CurveTable(genus=g, curves=curves, lift_conjugators=lifts)


def verify_curve_table(table: CurveTable) -> None:
    """Re-check the constraint system the shipped vectors were derived
    against; raises InvariantViolation on any failure.

    (i) the squared product of the four transvections is the identity;
    (ii) the span of the four classes has cokernel Z^2;
    (iii) adjoining their n-fold c-twists gives cokernel Z + Z/n for
    n in {1,2,3}; (iv) c pairs nontrivially with at least one of them.
    Additionally each curve's braid lift must induce exactly the
    transvection along its vector, tying the two data columns together.
    """
    g = table.genus
    cs = [table.curve(f"c{i}") for i in range(1, 5)]
    c = table.curve("c")
    dim = 2 * g

    M = homology.identity_matrix(dim)
    for ci in cs:
        M = homology.mat_mul(homology.transvection_matrix(ci.vector), M)
    if not homology.is_identity(homology.mat_mul(M, M)):
        raise InvariantViolation("(i) squared transvection product != identity")

    base_cols = [ci.vector for ci in cs]

    def cok(vectors):
        mat = tuple(tuple(v[i] for v in vectors) for i in range(dim))
        return homology.cokernel(mat)

    if cok(base_cols) != homology.AbelianGroup(rank=2):
        raise InvariantViolation("(ii) cokernel of the four classes is not Z^2")

    for n in (1, 2, 3):
        twisted = [homology.transvect(c, v, n) for v in base_cols]
        got = cok(base_cols + twisted)
        want = homology.AbelianGroup(rank=1, torsion=(n,) if n > 1 else ())
        if got != want:
            raise InvariantViolation(
                f"(iii) cokernel with {n}-twisted classes is {got}, not {want}")

    if all(homology.symplectic_pairing(ci.vector, c.vector, g) == 0
           for ci in cs):
        raise InvariantViolation("(iv) c pairs trivially with every class")

    # braid lift consistency: lift word acts on H1 as the transvection
    for cid, curve in table.curves.items():
        lift = words.distinguished_lift(
            TwistLetter(curve=curve),
            words.word(table.lift_conjugators[cid], 2 * g + 2))
        action = homology.braid_word_h1_action(lift.letters, g)
        expected = homology.transvection_matrix(curve.vector)
        if action != expected:
            raise InvariantViolation(
                f"lift of {cid} does not act as its transvection",
                curve_id=cid)


# ---------------------------------------------------------------------------
# spec operations

def _prepend_conjugator(letter: TwistLetter, c: CurveClass,
                        n: int) -> TwistLetter:
    if n == 0:
        return letter
    chain = letter.conjugator
    if chain and chain[0][0].id == c.id:
        merged = chain[0][1] + n
        rest = chain[1:]
        if merged == 0:
            return replace(letter, conjugator=rest)
        return replace(letter, conjugator=((c, merged),) + rest)
    return replace(letter, conjugator=((c, n),) + chain)


def _prepend_block_chain(chain, c: CurveClass, n: int):
    if n == 0:
        return chain
    if chain and chain[0][0] == c.id:
        merged = chain[0][1] + n
        rest = chain[1:]
        return rest if merged == 0 else ((c.id, merged),) + rest
    return ((c.id, n),) + chain


def fiber_sum(s1: FibrationSpec, s2: FibrationSpec,
              phi=()) -> FibrationSpec:
    """Concatenate two factorizations of the same genus, conjugating the
    second by the gluing twists phi (a chain of (curve, power) pairs)."""
    if s1.genus != s2.genus:
        raise GenusMismatch(f"genus {s1.genus} != {s2.genus}")
    second = list(s2.letters)
    for d, p in reversed(tuple(phi)):
        second = [_prepend_conjugator(letter, d, p) for letter in second]
    sigs = None
    if s1.block_signatures is not None and s2.block_signatures is not None:
        sigs = s1.block_signatures + s2.block_signatures
    prov = None
    if s1.provenance and s2.provenance:
        offset = len(s1.letters)
        shifted = []
        for b in s2.provenance.blocks:
            chain = b.conjugator
            for d, p in reversed(tuple(phi)):
                chain = _prepend_block_chain(chain, d, p)
            shifted.append(BlockInfo(b.start + offset, b.end + offset, chain))
        prov = Provenance(
            family=f"fiber_sum({s1.provenance.family},{s2.provenance.family})",
            blocks=s1.provenance.blocks + tuple(shifted))
    out = FibrationSpec(genus=s1.genus,
                        letters=tuple(s1.letters) + tuple(second),
                        has_section=s1.has_section and s2.has_section,
                        block_signatures=sigs,
                        curves=tuple({c.id: c for c in s1.curves + s2.curves}
                                     .values()),
                        provenance=prov)
    out.validate()
    return out


def build_lift_structure(spec: FibrationSpec, lift_data: dict):
    """Factorization-shape metadata for the lift-class rules: one
    (base word, conjugator word) pair per provenance block.

    Returns None when the spec carries no block structure or the letters
    do not literally extend their block's conjugator chain.
    """
    prov = spec.provenance
    if not prov or not prov.blocks:
        return None
    cover = sorted(prov.blocks, key=lambda b: b.start)
    if [x for b in cover for x in (b.start, b.end)] != \
            [x for i in range(len(cover)) for x in
             (cover[i - 1].end if i else 0, cover[i].end)] \
            or (cover and cover[-1].end != len(spec.letters)):
        return None
    structure = []
    for block in cover:
        conj_parts = []
        stripped = []
        ok = True
        for letter in spec.letters[block.start:block.end]:
            head = letter.conjugator[:len(block.conjugator)]
            if tuple((d.id, p) for d, p in head) != block.conjugator:
                ok = False
                break
            stripped.append(replace(letter,
                                    conjugator=letter.conjugator[len(head):]))
        if not ok:
            return None
        base = words.reduce_concat(
            [words.letter_lift(letter, lift_data).letters
             for letter in stripped])
        chain_letters = []
        for letter in spec.letters[block.start:block.end][:1]:
            for d, p in reversed(letter.conjugator[:len(block.conjugator)]):
                chain_letters.append(words.power(
                    words.distinguished_lift(
                        TwistLetter(curve=d),
                        words.word(lift_data[d.id],
                                   2 * spec.genus + 2)).letters, p))
        conj = words.reduce_concat(chain_letters) if chain_letters else []
        structure.append((tuple(base), tuple(conj)))
    return structure


def twist_deformation(s: FibrationSpec, split_index: int, c: CurveClass,
                      n: int, lift_data: dict | None = None,
                      budget: int = mcg.DEFAULT_BUDGET) -> FibrationSpec:
    """Conjugate the letters after ``split_index`` by the n-fold twist
    along c.

    Valid only when the sub-factorization after the split has trivial
    global braid monodromy; the braid engine checks this and the call
    fails rather than silently producing a factorization for which the
    deformation does not preserve the ambient picture.
    """
    if not 0 <= split_index <= len(s.letters):
        raise ValueError(f"split index {split_index} out of range")
    if n == 0:
        return s
    if lift_data is None:
        lift_data = default_lift_data(s)

    tail = FibrationSpec(genus=s.genus, letters=s.letters[split_index:],
                         has_section=True, curves=s.curves,
                         provenance=_tail_provenance(s, split_index))
    try:
        gbm = words.global_braid_monodromy(tail, lift_data)
    except MissingLiftData as exc:
        raise LiftUndecided(f"no braid lift data: {exc}") from exc
    structure = build_lift_structure(tail, lift_data)
    try:
        verdict = mcg.lift_class(gbm, structure=structure, budget=budget)
    except NotMcgTrivial as exc:
        # nontrivial mapping class image certainly fails the hypothesis
        raise LiftNotTrivial(
            "sub-factorization after the split is not even mapping class "
            "trivial") from exc
    if verdict == mcg.FULL_TWIST:
        raise LiftNotTrivial(
            "sub-factorization after the split lifts to the full twist")
    if verdict != mcg.TRIVIAL:
        raise LiftUndecided(
            "could not certify trivial braid lift within budget")

    letters = list(s.letters[:split_index])
    letters += [_prepend_conjugator(letter, c, n)
                for letter in s.letters[split_index:]]
    prov = s.provenance
    if prov:
        blocks = []
        for b in prov.blocks:
            if b.start >= split_index:
                blocks.append(replace(
                    b, conjugator=_prepend_block_chain(b.conjugator, c, n)))
            else:
                blocks.append(b)
        prov = replace(prov, blocks=tuple(blocks))
    curves = tuple({cc.id: cc for cc in s.curves + (c,)}.values())
    out = FibrationSpec(genus=s.genus, letters=tuple(letters),
                        has_section=s.has_section,
                        block_signatures=s.block_signatures,
                        curves=curves, provenance=prov)
    out.validate()
    return out


def _tail_provenance(s: FibrationSpec, split_index: int):
    prov = s.provenance
    if not prov:
        return None
    blocks = [BlockInfo(b.start - split_index, b.end - split_index,
                        b.conjugator)
              for b in prov.blocks if b.start >= split_index]
    return replace(prov, blocks=tuple(blocks))


# ---------------------------------------------------------------------------
# the demo family

def matsumoto_fibration(table: CurveTable | None = None) -> FibrationSpec:
    """The genus-2 fibration with eight singular fibers along the four
    table curves, listed twice; its total space is the 4-fold blow-up of
    the trivial torus bundle over the sphere."""
    table = table or load_curve_table()
    cs = [table.curve(f"c{i}") for i in range(1, 5)]
    letters = tuple(TwistLetter(curve=c) for c in cs + cs)
    spec = FibrationSpec(
        genus=table.genus, letters=letters, has_section=True,
        block_signatures=(invariants.MATSUMOTO_BLOCK_SIGNATURE,),
        curves=tuple(table.curves.values()),
        provenance=Provenance(family="matsumoto", pi1_abelian=True,
                              blocks=(BlockInfo(0, len(letters)),)))
    spec.validate()
    return spec


def family_mn(n: int, table: CurveTable | None = None) -> FibrationSpec:
    """The twisted double fiber sum: (f0 # f0) deformed against itself by
    the n-fold twist along c.  32 letters, the second 16 conjugated."""
    if n < 0:
        raise ValueError("twist parameter must be non-negative")
    table = table or load_curve_table()
    f0 = matsumoto_fibration(table)
    double = fiber_sum(f0, f0)
    quad = fiber_sum(double, double)
    spec = twist_deformation(quad, 2 * len(f0.letters), table.curve("c"), n,
                             lift_data=dict(table.lift_conjugators))
    prov = Provenance(family="mn", n=n, pi1_abelian=True,
                      blocks=spec.provenance.blocks if spec.provenance else ())
    return replace(spec, provenance=prov)


def default_lift_data(spec: FibrationSpec) -> dict:
    """Packaged positional lift data, restricted to curves the spec uses;
    only applicable to specs over the shipped genus-2 curve table."""
    table = load_curve_table()
    data = {}
    if spec.genus == table.genus:
        for c in spec.curves:
            shipped = table.curves.get(c.id)
            if shipped == c:
                data[c.id] = table.lift_conjugators[c.id]
    return data


# ---------------------------------------------------------------------------
# end-to-end report

def analyze(spec: FibrationSpec, m: int | None = None,
            lift_data: dict | None = None,
            budget: int = mcg.DEFAULT_BUDGET) -> dict:
    """Aggregate every module's output into one deterministic report.

    Undecided and Unknown values are surfaced in ``warnings`` rather than
    silently dropped.
    """
    warnings = []
    g = spec.genus
    report: dict = {
        "genus": g,
        "letter_count": len(spec.letters),
        "reducible_fibers": count_reducible(spec),
        "chi": invariants.euler_characteristic(g, len(spec.letters)),
    }

    h1 = None
    if spec.has_section:
        h1 = homology.first_homology(spec)
        report["h1"] = {"rank": h1.rank, "torsion": list(h1.torsion)}
    else:
        report["h1"] = None
        warnings.append("no section: first homology not computed")

    sigma = None
    if spec.block_signatures is not None:
        sigma = invariants.signature_by_additivity(spec.block_signatures)
        report["sigma"] = sigma
    else:
        report["sigma"] = None
        warnings.append("no block signatures: signature unknown")

    if h1 is not None and sigma is not None:
        betti = invariants.betti_table(report["chi"], sigma, b1=h1.rank,
                                       h1=h1)
        report["b1"] = betti.b1
        report["b2plus"] = betti.b2plus
        report["b2minus"] = betti.b2minus
        certified = bool(spec.provenance and spec.provenance.pi1_abelian)
        report["complex_structure"] = invariants.complex_obstruction(
            h1, betti.b2plus, certified)
    else:
        report["b1"] = report["b2plus"] = report["b2minus"] = None
        report["complex_structure"] = invariants.UNKNOWN
    if report["complex_structure"] == invariants.UNKNOWN:
        warnings.append("complex structure: no obstruction certificate")

    if lift_data is None:
        lift_data = default_lift_data(spec)
    lc = mcg.UNDECIDED
    try:
        gbm = words.global_braid_monodromy(spec, lift_data)
        structure = build_lift_structure(spec, lift_data)
        lc = mcg.lift_class(gbm, structure=structure, budget=budget)
    except MissingLiftData:
        warnings.append("lift class: no braid lift data for some curves")
    except NotMcgTrivial:
        warnings.append(
            "lift class: monodromy product is not mapping class trivial")
    report["lift_class"] = lc
    if lc == mcg.UNDECIDED:
        warnings.append("lift class undecided")
        report["ambient_bundle"] = None
    else:
        desc = sixfold.bundle_type(lc, g)
        report["ambient_bundle"] = {
            "bundle": desc.bundle,
            "twisted_is_trivial_bundle": desc.twisted_is_trivial_bundle,
        }

    ledger, chi_x = sixfold.blow_up_ledger(spec)
    report["blow_up_ledger"] = {
        "fiberwise_line_blowups": ledger.fiberwise_line_blowups,
        "point_blowups": ledger.point_blowups,
        "curve_blowups": list(ledger.curve_blowups),
    }
    report["chi_ambient"] = chi_x
    n0, desc_str = sixfold.y_diffeo_descriptor(spec)
    report["y_descriptor"] = desc_str
    yclass = sixfold.class_of_y(g, m if m is not None else 0)
    report["class_of_y"] = {"a": m if m is not None else "m",
                            "b": yclass.b}
    report["warnings"] = warnings
    return report
