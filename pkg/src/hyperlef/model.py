"""Domain types for curves, twist letters, and fibration specifications.

A fibration of genus g over the sphere is recorded purely combinatorially:
an ordered list of positive Dehn-twist letters, each letter a reference to
a curve class (integer homology vector plus separating-type tag) together
with an optional conjugator chain.  Everything downstream (first homology,
Euler characteristic, braid lifts, blow-up ledgers) is computed from this
data and the letter ordering alone; isotopy classes finer than homology
are deliberately not modeled.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .errors import InvariantViolation, MalformedDocument

NONSEP = "nonsep"
SEP = "sep"


@dataclass(frozen=True)
class CurveClass:
    """A simple closed curve on the genus-g surface, up to homology.

    ``vector`` lives in the standard symplectic basis a1, b1, ..., ag, bg.
    Separating curves carry the genus h of the smaller side instead of a
    homology class (their class vanishes).
    """

    id: str
    genus: int
    kind: str  # NONSEP or SEP
    vector: tuple[int, ...]
    h: int | None = None

    def validate(self) -> None:
        if self.genus < 1:
            raise InvariantViolation("genus must be >= 1", curve_id=self.id)
        if len(self.vector) != 2 * self.genus:
            raise InvariantViolation(
                f"vector length {len(self.vector)} != 2g = {2 * self.genus}",
                curve_id=self.id)
        if self.kind == NONSEP:
            if not any(self.vector):
                raise InvariantViolation(
                    "nonseparating curve must have nonzero class",
                    curve_id=self.id)
            if math.gcd(*(abs(x) for x in self.vector)) != 1:
                raise InvariantViolation(
                    "nonseparating curve class must be primitive",
                    curve_id=self.id)
            if self.h is not None:
                raise InvariantViolation(
                    "nonseparating curve carries no side genus",
                    curve_id=self.id)
        elif self.kind == SEP:
            if any(self.vector):
                raise InvariantViolation(
                    "separating curve must have zero class", curve_id=self.id)
            if self.h is None or not (0 < 2 * self.h <= self.genus):
                raise InvariantViolation(
                    f"separating side genus h={self.h} violates 0 < h <= g/2",
                    curve_id=self.id)
        else:
            raise InvariantViolation(
                f"unknown curve kind {self.kind!r}", curve_id=self.id)

    @property
    def separating(self) -> bool:
        return self.kind == SEP


@dataclass(frozen=True)
class TwistLetter:
    """One positive Dehn twist in a factorization.

    ``conjugator`` is an ordered chain of (curve, power) pairs: the letter
    is the twist along the image of ``curve`` under the listed twist
    powers, the last entry acting first.  Prepending an entry therefore
    wraps the letter in one more (outermost) twist.  Kept symbolic (not
    pre-expanded) so that a zero-fold twisting deformation is the literal
    identity on specs.
    """

    curve: CurveClass
    conjugator: tuple[tuple[CurveClass, int], ...] = ()

    def validate(self) -> None:
        self.curve.validate()
        for d, _p in self.conjugator:
            d.validate()
            if d.genus != self.curve.genus:
                raise InvariantViolation(
                    "conjugator curve genus mismatch", curve_id=d.id)


@dataclass(frozen=True)
class BlockInfo:
    """Half-open letter range [start, end) forming one fiber-sum block,
    with the conjugator chain applied uniformly to the whole block."""

    start: int
    end: int
    conjugator: tuple[tuple[str, int], ...] = ()  # (curve id, power)


@dataclass(frozen=True)
class Provenance:
    """Builder certificate attached to specs produced by this package.

    ``pi1_abelian`` certifies that the fundamental group of the total
    space is known to be abelian (so first homology determines it);
    ``blocks`` records the fiber-sum block structure used by the braid
    engine's structured lift-class rules.
    """

    family: str
    n: int | None = None
    pi1_abelian: bool = False
    blocks: tuple[BlockInfo, ...] = ()


@dataclass(frozen=True)
class FibrationSpec:
    genus: int
    letters: tuple[TwistLetter, ...]
    has_section: bool
    block_signatures: tuple[int, ...] | None = None
    curves: tuple[CurveClass, ...] = ()
    provenance: Provenance | None = field(default=None, compare=False)

    def validate(self, check_h1: bool = True) -> None:
        if self.genus < 1:
            raise InvariantViolation("spec genus must be >= 1")
        referenced = {}
        for letter in self.letters:
            letter.validate()
            referenced[letter.curve.id] = letter.curve
            for d, _p in letter.conjugator:
                referenced[d.id] = d
        for c in self.curves:
            c.validate()
            referenced.setdefault(c.id, c)
        for c in referenced.values():
            if c.genus != self.genus:
                raise InvariantViolation(
                    f"curve genus {c.genus} != spec genus {self.genus}",
                    curve_id=c.id)
        if check_h1:
            from . import homology

            if not homology.is_identity(homology.factorization_h1_action(self)):
                raise InvariantViolation(
                    "induced H1 transvection product is not the identity")


def count_reducible(spec: FibrationSpec) -> int:
    """Number of reducible singular fibers: letters along separating curves.

    Conjugation preserves the separating type, so the conjugator chain is
    ignored.
    """
    return sum(1 for letter in spec.letters if letter.curve.separating)


# ---------------------------------------------------------------------------
# document schema

def _curve_from_entry(entry: dict, genus: int) -> CurveClass:
    if not isinstance(entry, dict):
        raise MalformedDocument("curve entry must be an object")
    try:
        cid = entry["id"]
        kind = entry["kind"]
        vector = entry["vector"]
    except KeyError as exc:
        raise MalformedDocument(f"curve entry missing field {exc}") from None
    if kind not in (NONSEP, SEP):
        raise MalformedDocument(f"curve kind must be 'nonsep' or 'sep', got {kind!r}")
    if not isinstance(vector, list) or not all(isinstance(x, int) for x in vector):
        raise MalformedDocument(f"curve {cid}: vector must be a list of integers")
    h = entry.get("h")
    if h is not None and not isinstance(h, int):
        raise MalformedDocument(f"curve {cid}: h must be an integer")
    return CurveClass(id=str(cid), genus=genus, kind=kind,
                      vector=tuple(vector), h=h)


def spec_from_dict(doc: dict) -> FibrationSpec:
    """Build and validate a FibrationSpec from a parsed schema document."""
    if not isinstance(doc, dict):
        raise MalformedDocument("top level must be an object")
    try:
        genus = doc["genus"]
        has_section = doc["has_section"]
        curve_entries = doc["curves"]
        letter_entries = doc["letters"]
    except KeyError as exc:
        raise MalformedDocument(f"missing top-level field {exc}") from None
    if not isinstance(genus, int):
        raise MalformedDocument("genus must be an integer")
    if not isinstance(has_section, bool):
        raise MalformedDocument("has_section must be a boolean")
    if not isinstance(curve_entries, list) or not isinstance(letter_entries, list):
        raise MalformedDocument("curves and letters must be lists")

    curves: dict[str, CurveClass] = {}
    for entry in curve_entries:
        c = _curve_from_entry(entry, genus)
        if c.id in curves:
            raise MalformedDocument(f"duplicate curve id {c.id!r}")
        curves[c.id] = c

    def lookup(cid) -> CurveClass:
        try:
            return curves[cid]
        except KeyError:
            raise MalformedDocument(f"letter references unknown curve {cid!r}") from None

    letters = []
    for entry in letter_entries:
        if not isinstance(entry, dict) or "curve" not in entry:
            raise MalformedDocument("letter entry must be an object with a 'curve' field")
        conj = []
        for item in entry.get("conjugator", []):
            if not isinstance(item, dict) or "curve" not in item or "power" not in item:
                raise MalformedDocument("conjugator entry needs 'curve' and 'power'")
            if not isinstance(item["power"], int):
                raise MalformedDocument("conjugator power must be an integer")
            conj.append((lookup(item["curve"]), item["power"]))
        letters.append(TwistLetter(curve=lookup(entry["curve"]),
                                   conjugator=tuple(conj)))

    sigs = doc.get("block_signatures")
    if sigs is not None:
        if not isinstance(sigs, list) or not all(isinstance(x, int) for x in sigs):
            raise MalformedDocument("block_signatures must be a list of integers")
        sigs = tuple(sigs)

    spec = FibrationSpec(genus=genus, letters=tuple(letters),
                         has_section=has_section, block_signatures=sigs,
                         curves=tuple(curves.values()))
    spec.validate()
    return spec


def parse_spec(document: str) -> FibrationSpec:
    """Parse a spec document (JSON text) into a validated FibrationSpec."""
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"not valid JSON: {exc}") from None
    return spec_from_dict(doc)


def spec_to_dict(spec: FibrationSpec) -> dict:
    curves: dict[str, CurveClass] = {}
    for letter in spec.letters:
        curves.setdefault(letter.curve.id, letter.curve)
        for d, _p in letter.conjugator:
            curves.setdefault(d.id, d)
    for c in spec.curves:
        curves.setdefault(c.id, c)
    curve_docs = []
    for c in curves.values():
        entry = {"id": c.id, "kind": c.kind, "vector": list(c.vector)}
        if c.h is not None:
            entry["h"] = c.h
        curve_docs.append(entry)
    letter_docs = []
    for letter in spec.letters:
        entry: dict = {"curve": letter.curve.id}
        if letter.conjugator:
            entry["conjugator"] = [{"curve": d.id, "power": p}
                                   for d, p in letter.conjugator]
        letter_docs.append(entry)
    doc = {"genus": spec.genus, "has_section": spec.has_section,
           "curves": curve_docs, "letters": letter_docs}
    if spec.block_signatures is not None:
        doc["block_signatures"] = list(spec.block_signatures)
    return doc


def serialize_spec(spec: FibrationSpec) -> str:
    return json.dumps(spec_to_dict(spec), indent=2, sort_keys=False) + "\n"
