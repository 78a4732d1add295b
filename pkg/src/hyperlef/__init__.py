"""hyperlef: a symbolic engine for hyperelliptic Lefschetz fibrations.

Monodromy factorizations and their fiber-sum/twisting operations,
spherical braid lifts with a sound lift-class decision, first homology
and closed-form 4-manifold invariants of total spaces, blow-up
bookkeeping of the ambient 6-manifold, and the classification of
low-degree symplectic hypersurfaces of CP^3.
"""

from . import braid, constructions, delpezzo, homology, invariants, model, sixfold
from .constructions import (
    analyze,
    family_mn,
    fiber_sum,
    load_curve_table,
    matsumoto_fibration,
    twist_deformation,
    verify_curve_table,
)
from .model import (
    CurveClass,
    FibrationSpec,
    TwistLetter,
    count_reducible,
    parse_spec,
    serialize_spec,
)

__version__ = "0.1.0"

__all__ = [
    "braid", "constructions", "delpezzo", "homology", "invariants", "model",
    "sixfold", "analyze", "family_mn", "fiber_sum", "load_curve_table",
    "matsumoto_fibration", "twist_deformation", "verify_curve_table",
    "CurveClass", "FibrationSpec", "TwistLetter", "count_reducible",
    "parse_spec", "serialize_spec", "__version__",
]
