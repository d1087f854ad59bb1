"""Bundled corpus of published poems in the projective-plane form."""

from __future__ import annotations

from importlib import resources

from ..poemform import PoemDocument, parse_poem

POEM_NAMES = ("poem3", "poem4", "poem5", "poem6")

# epigraphs and notes kept out of the stanza text
PROVENANCE = {
    "poem3": "The smallest finite projective plane 3 (found in Segre, 1955)",
    "poem4": "The smallest finite projective plane 4 (found in Segre, 1955)",
    "poem5": "The smallest finite projective plane 5; "
    "epigraph: 'Could you use this form to write about, say, bluebells?'",
    "poem6": "The smallest finite projective plane 6",
}


def load_poem(name: str) -> PoemDocument:
    if name not in POEM_NAMES:
        raise KeyError(f"unknown corpus poem {name!r}; expected one of {POEM_NAMES}")
    text = resources.files("planepoem.corpus").joinpath(f"{name}.txt").read_text(encoding="utf-8")
    return parse_poem(text, provenance=PROVENANCE[name])
