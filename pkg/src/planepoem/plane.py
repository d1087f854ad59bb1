"""Point-line incidence structures and the field planes PG(2, q).

Points are indexed 0..n-1. Lines are strictly ascending tuples of point
indices, stored in lexicographic order of their member lists. The origin
tag records how a structure was built:

    ("field_plane", q)
    ("developed", n, residues)
    ("custom",)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .field import FieldSpec, make_field


class MalformedStructure(ValueError):
    """Structure violates basic well-formedness (bad indices, duplicate lines)."""


class NotAPlane(ValueError):
    """Operation requires a structure satisfying all three plane axioms."""


class IdenticalArguments(ValueError):
    """line_through / meet called with equal arguments."""


@dataclass(frozen=True)
class IncidenceStructure:
    point_count: int
    lines: tuple[tuple[int, ...], ...]
    point_labels: tuple[str, ...] | None = None
    origin: tuple = ("custom",)

    def __post_init__(self):
        seen = set()
        for line in self.lines:
            if list(line) != sorted(set(line)):
                raise MalformedStructure(f"line {line} is not a strictly ascending point list")
            for p in line:
                if not 0 <= p < self.point_count:
                    raise MalformedStructure(f"point index {p} out of range in line {line}")
            if line in seen:
                raise MalformedStructure(f"duplicate line {line}")
            seen.add(line)
        if self.point_labels is not None and len(self.point_labels) != self.point_count:
            raise MalformedStructure("point_labels length does not match point_count")

    def lines_through(self, p: int) -> list[int]:
        return [i for i, line in enumerate(self.lines) if p in line]


@dataclass(frozen=True)
class AxiomReport:
    axiom1_ok: bool
    axiom2_ok: bool
    axiom3_ok: bool
    witnesses: tuple[tuple, ...] = ()

    @property
    def all_ok(self) -> bool:
        return self.axiom1_ok and self.axiom2_ok and self.axiom3_ok

    def to_doc(self) -> dict:
        return {
            "axiom1_ok": self.axiom1_ok,
            "axiom2_ok": self.axiom2_ok,
            "axiom3_ok": self.axiom3_ok,
            "witnesses": [list(w) for w in self.witnesses],
        }


def normalize_point(spec: FieldSpec, coords: tuple[int, int, int]) -> tuple[int, int, int]:
    """Scale so the leftmost nonzero coordinate is 1 (canonical subspace rep)."""
    if coords == (0, 0, 0):
        raise ValueError("(0,0,0) is not a projective point")
    lead = next(c for c in coords if c != 0)
    s = spec.inv(lead)
    return tuple(spec.mul(s, c) for c in coords)  # type: ignore[return-value]


def _normalized_points(spec: FieldSpec) -> list[tuple[int, int, int]]:
    pts = []
    for coords in itertools.product(spec.elements(), repeat=3):
        if coords == (0, 0, 0):
            continue
        lead = next(c for c in coords if c != 0)
        if lead == 1:
            pts.append(coords)
    return pts  # already in lexicographic rep order


def build_field_plane(q: int) -> IncidenceStructure:
    """PG(2, q): normalized homogeneous points, lines as dual-triple zero sets."""
    spec = make_field(q)
    points = _normalized_points(spec)
    index = {pt: i for i, pt in enumerate(points)}
    lines = set()
    for a, b, c in points:  # dual triples are normalized the same way
        members = []
        for (x, y, z), i in index.items():
            s = spec.add(spec.add(spec.mul(a, x), spec.mul(b, y)), spec.mul(c, z))
            if s == 0:
                members.append(i)
        lines.add(tuple(sorted(members)))
    labels = tuple(f"{x}:{y}:{z}" for x, y, z in points)
    return IncidenceStructure(
        point_count=len(points),
        lines=tuple(sorted(lines)),
        point_labels=labels,
        origin=("field_plane", q),
    )


@lru_cache(maxsize=None)
def check_axioms(s: IncidenceStructure) -> AxiomReport:
    """Decide the three plane axioms exhaustively, with counterexample witnesses."""
    line_sets = [frozenset(line) for line in s.lines]
    through = [set() for _ in range(s.point_count)]
    for li, line in enumerate(s.lines):
        for p in line:
            through[p].add(li)

    axiom1_ok, axiom2_ok, axiom3_ok = True, True, False
    witnesses = []

    for p1, p2 in itertools.combinations(range(s.point_count), 2):
        common = through[p1] & through[p2]
        if len(common) != 1:
            axiom1_ok = False
            witnesses.append(("axiom1", p1, p2, len(common)))
            break

    for l1, l2 in itertools.combinations(range(len(s.lines)), 2):
        common = line_sets[l1] & line_sets[l2]
        if len(common) != 1:
            axiom2_ok = False
            witnesses.append(("axiom2", l1, l2, len(common)))
            break

    for quad in itertools.combinations(range(s.point_count), 4):
        if all(
            not any(set(t) <= ls for ls in line_sets)
            for t in itertools.combinations(quad, 3)
        ):
            axiom3_ok = True
            break
    if not axiom3_ok:
        witnesses.append(("axiom3", "no quadrilateral free of collinear triples"))

    return AxiomReport(axiom1_ok, axiom2_ok, axiom3_ok, tuple(witnesses))


def regularity_stats(s: IncidenceStructure) -> dict:
    """Point/line counts, incidence degree sets, and the plane order if defined."""
    per_line = {len(line) for line in s.lines}
    per_point = {len(s.lines_through(p)) for p in range(s.point_count)}
    order = None
    if len(per_line) == 1 and per_point == per_line:
        order = next(iter(per_line)) - 1
    return {
        "points": s.point_count,
        "lines": len(s.lines),
        "points_per_line": per_line,
        "lines_per_point": per_point,
        "order": order,
    }


def _require_plane(s: IncidenceStructure) -> None:
    if not check_axioms(s).all_ok:
        raise NotAPlane("structure does not satisfy the three plane axioms")


def line_through(s: IncidenceStructure, p1: int, p2: int) -> int:
    """Index of the unique line through two distinct points."""
    _require_plane(s)
    if p1 == p2:
        raise IdenticalArguments("need two distinct points")
    for i, line in enumerate(s.lines):
        if p1 in line and p2 in line:
            return i
    raise AssertionError("axioms verified but no common line found")


def meet(s: IncidenceStructure, l1: int, l2: int) -> int:
    """The unique common point of two distinct lines."""
    _require_plane(s)
    if l1 == l2:
        raise IdenticalArguments("need two distinct lines")
    common = set(s.lines[l1]) & set(s.lines[l2])
    return next(iter(common))


def origin_doc(origin: tuple) -> dict:
    kind = origin[0]
    if kind == "field_plane":
        return {"kind": "field_plane", "q": origin[1]}
    if kind == "developed":
        return {"kind": "developed", "n": origin[1], "residues": list(origin[2])}
    return {"kind": "custom"}


def origin_from_doc(doc: dict) -> tuple:
    kind = doc.get("kind", "custom")
    if kind == "field_plane":
        return ("field_plane", doc["q"])
    if kind == "developed":
        return ("developed", doc["n"], tuple(doc["residues"]))
    return ("custom",)


def to_doc(s: IncidenceStructure) -> dict:
    """Serializable plane document with stable key order."""
    return {
        "origin": origin_doc(s.origin),
        "point_count": s.point_count,
        "point_labels": list(s.point_labels) if s.point_labels is not None else None,
        "lines": [list(line) for line in s.lines],
    }


def from_doc(doc: dict) -> IncidenceStructure:
    try:
        labels = doc.get("point_labels")
        return IncidenceStructure(
            point_count=doc["point_count"],
            lines=tuple(tuple(line) for line in doc["lines"]),
            point_labels=tuple(labels) if labels is not None else None,
            origin=origin_from_doc(doc.get("origin", {"kind": "custom"})),
        )
    except (KeyError, TypeError) as exc:
        raise MalformedStructure(f"bad plane document: {exc}") from exc
