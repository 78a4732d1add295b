"""Homology and blow-up bookkeeping of the ambient 6-manifold.

The double cover construction embeds the fibration total space (up to
blow-up) as a hypersurface Y inside a CP^2-bundle X over the sphere.
Only the combinatorial shadow is modeled: the rank-2 pieces of H4 and H2
spanned by the fiber class A, the CP^1-subbundle class B, the
line-in-fiber class alpha and the section class beta; the class of Y;
the bundle-type decision from the lift class; and the ledger of point
and curve blow-ups with its Euler-characteristic total.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UndecidedLift
from .braid.mcg import FULL_TWIST, TRIVIAL, UNDECIDED
from .model import FibrationSpec, count_reducible

TRIVIAL_PRODUCT = "TrivialProduct"
TWISTED = "Twisted"


@dataclass(frozen=True)
class H4Class:
    """a * A + b * B with A the fiber class and B the CP^1-subbundle class."""

    a: int
    b: int

    def __add__(self, other: "H4Class") -> "H4Class":
        return H4Class(self.a + other.a, self.b + other.b)


@dataclass(frozen=True)
class H2Class:
    """alpha * (line in a fiber) + beta * (section class)."""

    alpha: int
    beta: int


@dataclass(frozen=True)
class BlowUpLedger:
    """Record of the blow-ups resolving the singular double-cover model.

    One fiberwise blow-up locus of g+1 lines, two point blow-ups per
    reducible fiber, and one curve blow-up of self-intersection data
    2h-1 per separating letter of side genus h.
    """

    fiberwise_line_blowups: int
    point_blowups: int
    curve_blowups: tuple[int, ...]


@dataclass(frozen=True)
class AmbientDescriptor:
    bundle: str  # TRIVIAL_PRODUCT or TWISTED
    genus: int | None = None
    twisted_is_trivial_bundle: bool | None = None


# intersection table: A.alpha = 0, A.beta = 1, B.alpha = 1, B.beta = 0
def intersect(Y: H4Class, gamma: H2Class) -> int:
    return Y.a * gamma.beta + Y.b * gamma.alpha


def class_of_y(g: int, m: int) -> H4Class:
    """The class of the resolved hypersurface: m A + (2g+2) B.

    Determined by the genus, the reducible-fiber count, and the
    intersection number m with the section class; in particular it is
    unchanged under the twisting deformation.
    """
    return H4Class(a=m, b=2 * g + 2)


def bundle_type(lift_class_value: str, g: int) -> AmbientDescriptor:
    """Trivial global braid monodromy puts Y inside the product bundle
    S^2 x CP^2; the full twist gives the twisted CP^2-bundle, which is a
    trivial bundle exactly when g = 1 mod 3."""
    if lift_class_value == TRIVIAL:
        return AmbientDescriptor(bundle=TRIVIAL_PRODUCT)
    if lift_class_value == FULL_TWIST:
        return AmbientDescriptor(bundle=TWISTED, genus=g,
                                 twisted_is_trivial_bundle=(g % 3 == 1))
    raise UndecidedLift(
        f"cannot decide ambient bundle for lift class {lift_class_value!r}")


def blow_up_ledger(spec: FibrationSpec) -> tuple[BlowUpLedger, int]:
    """Ledger of blow-ups and the Euler characteristic of the resulting
    ambient X.

    chi(X) = 6 (the CP^2-bundle) + 2 per blown-up line in the fiberwise
    locus, and per reducible fiber 4 (two point blow-ups) plus 2 per
    blown-up curve component (2h - 1 of them).
    """
    g = spec.genus
    sep_letters = [letter.curve.h for letter in spec.letters
                   if letter.curve.separating]
    ledger = BlowUpLedger(
        fiberwise_line_blowups=g + 1,
        point_blowups=2 * len(sep_letters),
        curve_blowups=tuple(2 * h - 1 for h in sep_letters),
    )
    chi_x = 6 + 2 * (g + 1) + sum(4 + 2 * (2 * h - 1) for h in sep_letters)
    return ledger, chi_x


def y_diffeo_descriptor(spec: FibrationSpec, name: str = "M") -> tuple[int, str]:
    """Y is the total space blown up once per reducible fiber."""
    n0 = count_reducible(spec)
    return n0, f"{name} # {n0}*CP2bar"
