"""Arcs, ovals, and conics in small field planes, and the Segre cross-check.

An arc meets every line in at most two points; an oval is an arc of size
order + 1. A conic is the zero set of a nondegenerate quadratic form over
GF(q), odd q. Segre: in odd-order field planes the two notions coincide.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .field import FieldSpec, make_field
from .plane import IncidenceStructure, build_field_plane, regularity_stats

OVAL_ORDER_CEILING = 7
_QUICK_SEGRE_ORDERS = (3, 5)


class OrderUndefined(ValueError):
    """Oval enumeration needs a structure with a defined plane order."""


class EvenCharacteristic(ValueError):
    """Conic machinery is restricted to odd q."""


class LongRunNotAllowed(ValueError):
    """q = 7 Segre check requires the explicit long-running flag."""


@dataclass(frozen=True)
class QuadraticForm:
    """F(x,y,z) = a x^2 + b y^2 + c z^2 + d xy + e xz + f yz over odd GF(q)."""

    spec: FieldSpec
    coeffs: tuple[int, int, int, int, int, int]

    def __post_init__(self):
        if self.spec.p == 2:
            raise EvenCharacteristic("quadratic forms supported only in odd characteristic")
        if all(c == 0 for c in self.coeffs):
            raise ValueError("zero form")

    def evaluate(self, point: tuple[int, int, int]) -> int:
        F, (a, b, c, d, e, f) = self.spec, self.coeffs
        x, y, z = point
        terms = (
            F.mul(a, F.mul(x, x)),
            F.mul(b, F.mul(y, y)),
            F.mul(c, F.mul(z, z)),
            F.mul(d, F.mul(x, y)),
            F.mul(e, F.mul(x, z)),
            F.mul(f, F.mul(y, z)),
        )
        total = 0
        for t in terms:
            total = F.add(total, t)
        return total

    def is_nondegenerate(self) -> bool:
        """Nonzero determinant of the associated symmetric matrix."""
        F, (a, b, c, d, e, f) = self.spec, self.coeffs
        h = F.inv(2)  # valid: odd characteristic
        m = [
            [a, F.mul(h, d), F.mul(h, e)],
            [F.mul(h, d), b, F.mul(h, f)],
            [F.mul(h, e), F.mul(h, f), c],
        ]
        det = 0
        for sign, perm in (
            (1, (0, 1, 2)), (1, (1, 2, 0)), (1, (2, 0, 1)),
            (-1, (0, 2, 1)), (-1, (2, 1, 0)), (-1, (1, 0, 2)),
        ):
            term = F.mul(F.mul(m[0][perm[0]], m[1][perm[1]]), m[2][perm[2]])
            det = F.add(det, term if sign == 1 else F.neg(term))
        return det != 0


def is_arc(plane: IncidenceStructure, pts) -> bool:
    """True iff no line of the plane contains three or more of the points."""
    members = set(pts)
    return all(len(members & set(line)) <= 2 for line in plane.lines)


def enumerate_ovals(plane: IncidenceStructure) -> list[tuple[int, ...]]:
    """All (order+1)-point arcs, by ascending depth-first extension with pruning."""
    order = regularity_stats(plane)["order"]
    if order is None:
        raise OrderUndefined("plane order undefined; cannot size ovals")
    if order > OVAL_ORDER_CEILING:
        raise ValueError(f"order {order} exceeds oval enumeration ceiling {OVAL_ORDER_CEILING}")
    target = order + 1
    through = [[] for _ in range(plane.point_count)]
    for li, line in enumerate(plane.lines):
        for p in line:
            through[p].append(li)
    counts = [0] * len(plane.lines)
    current: list[int] = []
    found: list[tuple[int, ...]] = []

    def extend(start: int) -> None:
        if len(current) == target:
            found.append(tuple(current))
            return
        for p in range(start, plane.point_count):
            if any(counts[li] == 2 for li in through[p]):
                continue
            for li in through[p]:
                counts[li] += 1
            current.append(p)
            extend(p + 1)
            current.pop()
            for li in through[p]:
                counts[li] -= 1

    extend(0)
    return found  # ascending DFS yields lexicographic order


def enumerate_ovals_bruteforce(plane: IncidenceStructure) -> list[tuple[int, ...]]:
    """Unpruned power-set filter; the oracle for the pruned search at q = 3."""
    order = regularity_stats(plane)["order"]
    if order is None:
        raise OrderUndefined("plane order undefined; cannot size ovals")
    return [
        combo
        for combo in itertools.combinations(range(plane.point_count), order + 1)
        if is_arc(plane, combo)
    ]


def enumerate_conics(q: int) -> list[tuple[int, ...]]:
    """Deduplicated zero sets of all nondegenerate forms over GF(q), odd q."""
    if q % 2 == 0:
        raise EvenCharacteristic(f"conic enumeration requires odd q, got {q}")
    spec = make_field(q)
    plane = build_field_plane(q)
    points = [tuple(int(v) for v in label.split(":")) for label in plane.point_labels]
    seen: set[tuple[int, ...]] = set()
    # one representative per scalar class: leading nonzero coefficient = 1
    for lead in range(6):
        prefix = (0,) * lead + (1,)
        for rest in itertools.product(range(q), repeat=5 - lead):
            form = QuadraticForm(spec=spec, coeffs=prefix + rest)
            if not form.is_nondegenerate():
                continue
            zero_set = tuple(
                i for i, pt in enumerate(points) if form.evaluate(pt) == 0
            )
            seen.add(zero_set)
    return sorted(seen)


def segre_check(q: int, allow_long: bool = False) -> dict:
    """Cross-check oval and conic enumerations for set equality."""
    if q % 2 == 0:
        raise EvenCharacteristic(f"Segre check requires odd q, got {q}")
    if q not in _QUICK_SEGRE_ORDERS:
        if q == 7 and allow_long:
            pass
        elif q == 7:
            raise LongRunNotAllowed("q = 7 takes minutes; pass allow_long=True")
        else:
            raise ValueError(f"Segre check supports q in {{3, 5, 7}}, got {q}")
    plane = build_field_plane(q)
    ovals = enumerate_ovals(plane)
    conics = enumerate_conics(q)
    return {
        "q": q,
        "ovals": len(ovals),
        "conics": len(conics),
        "equal_as_sets": set(ovals) == set(conics),
    }
