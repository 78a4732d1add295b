"""Classification of low-degree symplectic hypersurfaces of CP^3.

A degree-k hypersurface Y has c1(TY) = (4-k) eta and
c2(TY) = (k^2-4k+6) eta^2 by the Whitney formula, where eta restricts
the hyperplane class; eta^2 evaluates to k on Y, so chi = k(k^2-4k+6)
and the signature comes from c1^2 = 3 sigma + 2 chi.  For k <= 3 the
anticanonical class is ample, Y is a Del Pezzo surface up to
symplectomorphism, and the Betti arithmetic pins the diffeomorphism
type.  Degrees k >= 4 are outside the classified range and reported as
Unsupported, not guessed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonIntegralSignature, OutOfRange

CP2 = "CP2"
S2xS2 = "S2xS2"
CP2_6CP2BAR = "CP2_6CP2bar"
UNSUPPORTED = "Unsupported"

DIFFEO_LABELS = {
    CP2: "CP2",
    S2xS2: "S2 x S2",
    CP2_6CP2BAR: "CP2 # 6 CP2bar",
    UNSUPPORTED: "unsupported (degree outside the classified range 1..3)",
}


@dataclass(frozen=True)
class HypersurfaceData:
    k: int
    c1_coefficient: int
    c2_coefficient: int
    chi: int | None
    sigma: int | None
    b2minus: int | None
    spin: bool | None
    diffeo_type: str


def chern_data(k: int) -> tuple[int, int]:
    if k < 1:
        raise OutOfRange("degree must be >= 1")
    return 4 - k, k * k - 4 * k + 6


def hypersurface_invariants(k: int) -> tuple[int, int]:
    """(chi, sigma) from the Chern numbers; eta^2 evaluates to k on Y."""
    c1, c2 = chern_data(k)
    chi = k * c2
    num = c1 * c1 * k - 2 * chi  # c1^2 = 3 sigma + 2 chi
    if num % 3:
        raise NonIntegralSignature(f"c1^2 - 2 chi = {num} not divisible by 3")
    return chi, num // 3


def b2minus(k: int) -> int:
    """Closed form 3(k-1)^2 / (k^2 - 6k + 11), valid for 1 <= k <= 3."""
    if not 1 <= k <= 3:
        raise OutOfRange(f"b2- formula only valid for 1 <= k <= 3, got {k}")
    num = 3 * (k - 1) ** 2
    den = k * k - 6 * k + 11
    if num % den:
        raise OutOfRange(f"{num} not divisible by {den}")
    return num // den


def classify(k: int) -> HypersurfaceData:
    if k < 1:
        raise OutOfRange("degree must be >= 1")
    c1, c2 = chern_data(k)
    if k > 3:
        return HypersurfaceData(k=k, c1_coefficient=c1, c2_coefficient=c2,
                                chi=None, sigma=None, b2minus=None, spin=None,
                                diffeo_type=UNSUPPORTED)
    chi, sigma = hypersurface_invariants(k)
    b2m = b2minus(k)
    spin = c1 % 2 == 0  # even c1 with b1 = 0
    diffeo = {1: CP2, 2: S2xS2, 3: CP2_6CP2BAR}[k]
    return HypersurfaceData(k=k, c1_coefficient=c1, c2_coefficient=c2,
                            chi=chi, sigma=sigma, b2minus=b2m, spin=spin,
                            diffeo_type=diffeo)
