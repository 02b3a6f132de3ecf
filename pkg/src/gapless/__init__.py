"""Gapless monotone triangles, Gog words, Magog triangles and 312-subpatterns."""

from .analysis import asm_count, lambda1, lambda2, log_asm_count
from .bijections import (
    Shape,
    asm_to_gog_word,
    asm_to_monotone,
    delta,
    delta_inverse,
    gog_word_to_asm,
    gog_word_to_monotone,
    monotone_to_asm,
    monotone_to_gog_word,
    shape_of,
    shape_to_triangle,
)
from .growth import count_gapless_shapes, enumerate_gapless_shapes
from .objects import (
    Asm,
    GapPosition,
    GogWord,
    MagogTriangle,
    MonotoneTriangle,
    find_gaps_magog,
    find_gaps_monotone,
    permutation_to_monotone,
    validate_gog_word,
    validate_magog,
    validate_monotone,
    validate_monotone_reduced,
)
from .patterns import perm_contains_312, word_312_first_position, word_avoids_312
from .rectangles import alpha, rho

__version__ = "0.1.0"
