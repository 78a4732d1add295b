"""Closed-form 4-manifold invariants of Lefschetz fibration total spaces.

Euler characteristic from the handle count, signature by additivity over
declared fiber-sum blocks, Betti numbers from the standard identities
for closed oriented 4-manifolds (with b3 = b1), blow-up adjustment, and
the complex-structure obstruction for the twisted families.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import InconsistentInvariants, MissingBlockData
from .homology import AbelianGroup

OBSTRUCTED = "Obstructed"
UNKNOWN = "Unknown"

# signature of one Matsumoto block, i.e. of the genus-2 fibration whose
# total space is the 4-fold blow-up of the trivial torus bundle over S^2
MATSUMOTO_BLOCK_SIGNATURE = -4


@dataclass(frozen=True)
class InvariantReport:
    chi: int
    sigma: int
    b1: int
    b2plus: int
    b2minus: int
    h1: AbelianGroup | None = None
    complex_structure: str = UNKNOWN

    def check(self) -> None:
        if self.sigma + self.chi != 2 * (1 - self.b1 + self.b2plus):
            raise InconsistentInvariants("sigma + chi != 2(1 - b1 + b2+)")
        if self.sigma != self.b2plus - self.b2minus:
            raise InconsistentInvariants("sigma != b2+ - b2-")
        if self.chi != 2 - 2 * self.b1 + self.b2plus + self.b2minus:
            raise InconsistentInvariants("chi != 2 - 2 b1 + b2+ + b2-")


def euler_characteristic(g: int, k: int) -> int:
    """chi of a genus-g fibration over the sphere with k critical points:
    2 chi(Sigma_g) + k."""
    return 4 - 4 * g + k


def signature_by_additivity(block_signatures) -> int:
    """Sum of declared per-block signatures (signature is additive when
    gluing along a separating 3-manifold)."""
    if block_signatures is None:
        raise MissingBlockData("no block signatures declared")
    return sum(block_signatures)


def betti_table(chi: int, sigma: int, b1: int,
                h1: AbelianGroup | None = None,
                complex_structure: str = UNKNOWN) -> InvariantReport:
    """Complete the Betti numbers from (chi, sigma, b1)."""
    if (sigma + chi) % 2:
        raise InconsistentInvariants(
            f"sigma + chi = {sigma + chi} must be even")
    b2plus = (sigma + chi) // 2 - 1 + b1
    b2minus = b2plus - sigma
    if b2plus < 0 or b2minus < 0:
        raise InconsistentInvariants(
            f"negative b2 (b2+ = {b2plus}, b2- = {b2minus})")
    report = InvariantReport(chi=chi, sigma=sigma, b1=b1, b2plus=b2plus,
                             b2minus=b2minus, h1=h1,
                             complex_structure=complex_structure)
    report.check()
    return report


def blow_up_adjust(report: InvariantReport, count: int) -> InvariantReport:
    """Blow up ``count`` points: chi and b2- grow, sigma drops; b1, b2+,
    H1, and the complex-structure verdict are untouched."""
    if count < 0:
        raise ValueError("blow-up count must be non-negative")
    out = replace(report, chi=report.chi + count, sigma=report.sigma - count,
                  b2minus=report.b2minus + count)
    out.check()
    return out


def complex_obstruction(h1: AbelianGroup, b2plus: int,
                        pi1_abelian_certified: bool) -> str:
    """Obstructed only when the provenance certificate guarantees that
    the fundamental group equals H1 = Z + Z/n with n >= 1 and b2+ >= 1;
    otherwise no claim is made."""
    if not pi1_abelian_certified:
        return UNKNOWN
    if b2plus < 1:
        return UNKNOWN
    if h1.rank == 1 and len(h1.torsion) <= 1:
        # Z (+ Z/n); n = 1 means trivial torsion, still obstructed
        return OBSTRUCTED
    return UNKNOWN
