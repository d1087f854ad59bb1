"""Finite projective planes, difference sets, ovals and conics, octonions,
and the projective-plane poetic form."""

from .diffset import DifferenceSet, develop, search_difference_sets, verify_difference_set
from .field import make_field
from .plane import IncidenceStructure, build_field_plane, check_axioms, regularity_stats
from .poemform import (
    FormPattern,
    PoemDocument,
    canonical_fano_form,
    form_from_difference_set,
    octonion_ordered_form,
    parse_poem,
    scaffold,
    similarity,
    validate,
)

__all__ = [
    "DifferenceSet",
    "FormPattern",
    "IncidenceStructure",
    "PoemDocument",
    "build_field_plane",
    "canonical_fano_form",
    "check_axioms",
    "develop",
    "form_from_difference_set",
    "make_field",
    "octonion_ordered_form",
    "parse_poem",
    "regularity_stats",
    "scaffold",
    "search_difference_sets",
    "similarity",
    "validate",
    "verify_difference_set",
]

__version__ = "0.1.0"
