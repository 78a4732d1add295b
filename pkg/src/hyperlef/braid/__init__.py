"""Braid word calculus: planar and spherical words, distinguished lifts
of Dehn twists, and the lift-class decision for mapping-class-trivial
words."""

from ._kernel import IMPLEMENTATION, free_reduce, inverse, power, reduce_concat
from .mcg import (
    FULL_TWIST,
    TRIVIAL,
    UNDECIDED,
    UNKNOWN,
    bfs_trivial,
    is_mcg_trivial_exact,
    lift_class,
    mcg_image_trivial,
)
from .words import (
    PLANAR,
    SPHERICAL,
    BraidWord,
    braid_inverse,
    braid_power,
    concat,
    degree,
    distinguished_lift,
    free_reduced,
    full_twist,
    global_braid_monodromy,
    letter_lift,
    permutation_of,
    rim_word,
    word,
)

__all__ = [
    "IMPLEMENTATION", "free_reduce", "inverse", "power", "reduce_concat",
    "FULL_TWIST", "TRIVIAL", "UNDECIDED", "UNKNOWN", "bfs_trivial",
    "is_mcg_trivial_exact", "lift_class", "mcg_image_trivial",
    "PLANAR", "SPHERICAL", "BraidWord", "braid_inverse", "braid_power",
    "concat", "degree", "distinguished_lift", "free_reduced", "full_twist",
    "global_braid_monodromy", "letter_lift", "permutation_of", "rim_word",
    "word",
]
