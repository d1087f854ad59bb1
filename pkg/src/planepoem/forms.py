"""Registry of named form patterns shared by the CLI and the HTTP service."""

from __future__ import annotations

import dataclasses

from .diffset import DifferenceSet
from .poemform import (
    FormPattern,
    canonical_fano_form,
    form_from_difference_set,
    octonion_ordered_form,
)


def default_forms() -> dict[str, FormPattern]:
    plane13 = dataclasses.replace(
        form_from_difference_set(DifferenceSet(n=13, residues=(0, 1, 3, 9))),
        name="plane13",
    )
    patterns = (canonical_fano_form(), octonion_ordered_form(), plane13)
    return {p.name: p for p in patterns}
