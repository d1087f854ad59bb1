"""The projective-plane poetic form: patterns, scaffolding, validation.

A pattern maps each projective point to a poetic line and each projective
line to a stanza. Validation groups the slots of each point into a
repetition class and checks the class members are the "same" line under
exact, normalized, or fuzzy identity.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .diffset import DifferenceSet, NotPerfect, develop, verify_difference_set
from .plane import IncidenceStructure, check_axioms

MODES = ("exact", "normalized", "fuzzy")
DEFAULT_FUZZY_THRESHOLD = 0.6

# ASCII punctuation plus typographic quotes and dashes
_PUNCT_RE = re.compile(r"[!-/:-@\[-`{-~‘’“”–—…«»‹›]")
_WS_RE = re.compile(r"\s+")


class InvalidForm(ValueError):
    """Stanza sets do not form a projective plane's line set."""


class MissingBaseLine(ValueError):
    """Scaffolding needs a nonempty base line for every point id."""


class EmptyInput(ValueError):
    """Poem text contained no non-blank lines."""


@dataclass(frozen=True)
class FormPattern:
    name: str
    point_count: int
    stanzas: tuple[tuple[int, ...], ...]
    source: tuple = ("custom",)

    def __post_init__(self):
        used = set(itertools.chain.from_iterable(self.stanzas))
        if used != set(range(self.point_count)):
            raise InvalidForm("every point id in [0, point_count) must appear in some stanza")
        if any(len(set(s)) != len(s) for s in self.stanzas):
            raise InvalidForm("a stanza may not repeat a point id")
        line_tuples = {tuple(sorted(s)) for s in self.stanzas}
        if len(line_tuples) != len(self.stanzas):
            raise InvalidForm("stanzas must be distinct as sets")
        structure = IncidenceStructure(
            point_count=self.point_count,
            lines=tuple(sorted(line_tuples)),
        )
        if not check_axioms(structure).all_ok:
            raise InvalidForm("stanza sets do not satisfy the three plane axioms")

    def to_doc(self) -> dict:
        return {
            "name": self.name,
            "point_count": self.point_count,
            "stanzas": [list(s) for s in self.stanzas],
            "source": list(self.source),
        }


@dataclass(frozen=True)
class PoemDocument:
    stanzas: tuple[tuple[str, ...], ...]
    provenance: str | None = None

    def __post_init__(self):
        if not self.stanzas:
            raise EmptyInput("a poem needs at least one stanza")
        for stanza in self.stanzas:
            if not stanza or any(not line.strip() for line in stanza):
                raise ValueError("blank lines are not allowed inside a stanza")


def canonical_fano_form() -> FormPattern:
    """The published Fano line table, row orders verbatim (note [1,4,2], [3,5,2])."""
    return FormPattern(
        name="fano-paper",
        point_count=7,
        stanzas=((0, 1, 3), (0, 4, 5), (0, 2, 6), (1, 5, 6), (1, 4, 2), (3, 4, 6), (3, 5, 2)),
        source=("canonical_fano",),
    )


def octonion_ordered_form() -> FormPattern:
    """Stanzas ordered by the directed octonion cycles."""
    return FormPattern(
        name="fano-octonion",
        point_count=7,
        stanzas=((3, 1, 0), (0, 2, 6), (0, 5, 4), (3, 4, 6), (2, 5, 3), (2, 1, 4), (1, 5, 6)),
        source=("octonion_ordered",),
    )


def form_from_difference_set(ds: DifferenceSet, strategy: str = "anchor_grouped") -> FormPattern:
    """Pattern from a developed plane.

    anchor_grouped: for each residue of D ascending, emit the not-yet-seen
    translates through it (ascending translation index), anchor first then
    ascending. translation_order: translates L_0..L_{n-1}, each ascending.
    """
    if not verify_difference_set(ds).ok:
        raise NotPerfect(f"{list(ds.residues)} mod {ds.n} is not a perfect difference set")
    n = ds.n
    translates = [tuple(sorted((d + i) % n for d in ds.residues)) for i in range(n)]
    if strategy == "translation_order":
        stanzas = tuple(translates)
    elif strategy == "anchor_grouped":
        emitted: set[tuple[int, ...]] = set()
        ordered = []
        for anchor in ds.residues:
            for line in translates:
                if anchor in line and line not in emitted:
                    emitted.add(line)
                    ordered.append((anchor,) + tuple(p for p in line if p != anchor))
        stanzas = tuple(ordered)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return FormPattern(
        name=f"diffset-{n}-{strategy}",
        point_count=n,
        stanzas=stanzas,
        source=("developed", n, ds.residues, strategy),
    )


def scaffold(pattern: FormPattern, base_lines: dict[int, str]) -> PoemDocument:
    """Substitute base lines into the pattern, verbatim."""
    for pid in range(pattern.point_count):
        if pid not in base_lines or not base_lines[pid].strip():
            raise MissingBaseLine(f"missing or blank base line for point {pid}")
    return PoemDocument(
        stanzas=tuple(
            tuple(base_lines[pid] for pid in stanza) for stanza in pattern.stanzas
        )
    )


def parse_poem(text: str, provenance: str | None = None) -> PoemDocument:
    """Split into stanzas on runs of blank lines; raw lines kept verbatim."""
    stanzas: list[tuple[str, ...]] = []
    current: list[str] = []
    for raw in text.splitlines():
        if raw.strip():
            current.append(raw)
        elif current:
            stanzas.append(tuple(current))
            current = []
    if current:
        stanzas.append(tuple(current))
    if not stanzas:
        raise EmptyInput("no non-blank lines in input")
    return PoemDocument(stanzas=tuple(stanzas), provenance=provenance)


def render_poem(poem: PoemDocument) -> str:
    return "\n\n".join("\n".join(stanza) for stanza in poem.stanzas)


def normalize_line(s: str) -> str:
    """Lowercase, strip punctuation, collapse whitespace."""
    s = _PUNCT_RE.sub("", s.lower())
    return _WS_RE.sub(" ", s).strip()


def _edit_distance(a: str, b: str) -> int:
    if len(a) > len(b):
        a, b = b, a
    current = list(range(len(a) + 1))
    for i, cb in enumerate(b, start=1):
        previous, current = current, [i] + [0] * len(a)
        for j, ca in enumerate(a, start=1):
            current[j] = min(
                previous[j] + 1,
                current[j - 1] + 1,
                previous[j - 1] + (ca != cb),
            )
    return current[len(a)]


def similarity(a: str, b: str) -> float:
    """1 - editdistance(normalized) / max length; two empty strings are identical."""
    na, nb = normalize_line(a), normalize_line(b)
    longest = max(len(na), len(nb))
    if longest == 0:
        return 1.0
    return 1.0 - _edit_distance(na, nb) / longest


@dataclass(frozen=True)
class ValidationReport:
    shape_ok: bool
    mode: str
    threshold: float
    classes: dict
    violations: tuple[tuple[tuple[int, int], tuple[int, int], float], ...]
    overall_ok: bool

    def to_doc(self) -> dict:
        return {
            "shape_ok": self.shape_ok,
            "mode": self.mode,
            "threshold": self.threshold,
            "classes": {
                str(pid): {
                    "positions": [list(pos) for pos in info["positions"]],
                    "min_pairwise_similarity": info["min_pairwise_similarity"],
                    "ok": info["ok"],
                }
                for pid, info in sorted(self.classes.items())
            },
            "violations": [
                [list(p1), list(p2), sim] for p1, p2, sim in self.violations
            ],
            "overall_ok": self.overall_ok,
        }


def _pair_ok(a: str, b: str, mode: str, threshold: float) -> tuple[bool, float]:
    sim = round(similarity(a, b), 6)
    if mode == "exact":
        return a == b, sim
    if mode == "normalized":
        return normalize_line(a) == normalize_line(b), sim
    return sim >= threshold, sim


def validate(
    poem: PoemDocument,
    pattern: FormPattern,
    mode: str = "exact",
    threshold: float | None = None,
) -> ValidationReport:
    """Check stanza shape and per-point repetition classes against the pattern."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if mode == "fuzzy":
        if threshold is None:
            threshold = DEFAULT_FUZZY_THRESHOLD
        if not 0.0 <= threshold <= 1.0:
            raise ValueError("threshold must lie in [0, 1]")
    else:
        threshold = 1.0

    shape_ok = len(poem.stanzas) == len(pattern.stanzas) and all(
        len(ps) == len(fs) for ps, fs in zip(poem.stanzas, pattern.stanzas)
    )
    classes: dict[int, dict] = {}
    violations: list[tuple[tuple[int, int], tuple[int, int], float]] = []
    if shape_ok:
        slots: dict[int, list[tuple[int, int]]] = {pid: [] for pid in range(pattern.point_count)}
        for si, stanza in enumerate(pattern.stanzas):
            for j, pid in enumerate(stanza):
                slots[pid].append((si, j))
        for pid, positions in slots.items():
            min_sim = 1.0
            ok = True
            for p1, p2 in itertools.combinations(positions, 2):
                a = poem.stanzas[p1[0]][p1[1]]
                b = poem.stanzas[p2[0]][p2[1]]
                pair_ok, sim = _pair_ok(a, b, mode, threshold)
                min_sim = min(min_sim, sim)
                if not pair_ok:
                    ok = False
                    violations.append((p1, p2, sim))
            classes[pid] = {
                "positions": tuple(positions),
                "min_pairwise_similarity": min_sim,
                "ok": ok,
            }
    overall = shape_ok and all(info["ok"] for info in classes.values())
    return ValidationReport(
        shape_ok=shape_ok,
        mode=mode,
        threshold=threshold,
        classes=classes,
        violations=tuple(violations),
        overall_ok=overall,
    )


def discover_structure(poem: PoemDocument, threshold: float) -> dict:
    """Cluster lines by similarity and read the induced incidence structure.

    Single-linkage: lines whose pairwise similarity reaches the threshold
    are merged. Stanzas map to sets of cluster ids; duplicate stanza-sets
    are dropped (incidence structures forbid repeated lines).
    """
    if not 0.0 < threshold <= 1.0:
        raise ValueError("threshold must lie in (0, 1]")
    positions = [
        (si, j) for si, stanza in enumerate(poem.stanzas) for j in range(len(stanza))
    ]
    texts = [poem.stanzas[si][j] for si, j in positions]
    parent = list(range(len(positions)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in itertools.combinations(range(len(positions)), 2):
        if similarity(texts[i], texts[j]) >= threshold:
            parent[find(i)] = find(j)

    roots: dict[int, int] = {}
    cluster_of: list[int] = []
    for i in range(len(positions)):
        r = find(i)
        if r not in roots:
            roots[r] = len(roots)
        cluster_of.append(roots[r])

    clusters: dict[int, list[tuple[int, int]]] = {cid: [] for cid in range(len(roots))}
    for pos, cid in zip(positions, cluster_of):
        clusters[cid].append(pos)

    stanza_sets = []
    for si, stanza in enumerate(poem.stanzas):
        members = tuple(sorted({cluster_of[positions.index((si, j))] for j in range(len(stanza))}))
        stanza_sets.append(members)
    unique_lines = tuple(sorted(set(stanza_sets)))
    induced = IncidenceStructure(point_count=len(roots), lines=unique_lines)
    return {
        "clusters": {cid: tuple(members) for cid, members in clusters.items()},
        "induced": induced,
        "axiom_report": check_axioms(induced),
    }
