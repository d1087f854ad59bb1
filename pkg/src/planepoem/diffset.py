"""Perfect difference sets modulo n: verification, search, development.

A set D of k residues mod n is perfect when the k(k-1) ordered differences
a - b cover 1..n-1 exactly once. Developing D yields an incidence structure
whose lines are the translates D + i.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .plane import IncidenceStructure

SEARCH_MODULUS_CEILING = 40


class NotPerfect(ValueError):
    """The residues do not form a perfect difference set."""


class SearchSpaceTooLarge(ValueError):
    """Search requested beyond the modulus guard."""


class WrongOrigin(ValueError):
    """Structure was not developed from a difference set."""


@dataclass(frozen=True)
class DifferenceSet:
    n: int
    residues: tuple[int, ...]

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("modulus must be >= 3")
        if len(self.residues) < 2:
            raise ValueError("need at least 2 residues")
        reduced = [r % self.n for r in self.residues]
        if sorted(set(reduced)) != list(self.residues):
            raise ValueError("residues must be distinct, reduced mod n, strictly ascending")


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    table: tuple[tuple[int, int, int], ...]  # (a, b, (a-b) mod n)
    missing: tuple[int, ...]
    repeated: tuple[int, ...]

    def to_doc(self, ds: DifferenceSet) -> dict:
        return {
            "n": ds.n,
            "residues": list(ds.residues),
            "ok": self.ok,
            "table": [list(row) for row in self.table],
            "missing": list(self.missing),
            "repeated": list(self.repeated),
        }


def verify_difference_set(ds: DifferenceSet) -> VerifyResult:
    """Tabulate all ordered differences and check exact coverage of 1..n-1."""
    table = tuple(
        (a, b, (a - b) % ds.n)
        for a in ds.residues
        for b in ds.residues
        if a != b
    )
    counts = Counter(d for _, _, d in table)
    missing = tuple(d for d in range(1, ds.n) if counts[d] == 0)
    repeated = tuple(
        itertools.chain.from_iterable([d] * (c - 1) for d, c in sorted(counts.items()) if c > 1)
    )
    ok = not missing and not repeated and counts[0] == 0
    return VerifyResult(ok=ok, table=table, missing=missing, repeated=repeated)


def search_difference_sets(n: int, k: int) -> list[DifferenceSet]:
    """All perfect k-subsets of Z_n, by exhaustive scan, in lexicographic order."""
    if not 2 <= k < n:
        raise ValueError("need 2 <= k < n")
    if n > SEARCH_MODULUS_CEILING:
        raise SearchSpaceTooLarge(f"modulus {n} exceeds search guard {SEARCH_MODULUS_CEILING}")
    if k * (k - 1) != n - 1:
        return []
    found = []
    for combo in itertools.combinations(range(n), k):
        ds = DifferenceSet(n=n, residues=combo)
        if verify_difference_set(ds).ok:
            found.append(ds)
    return found


def canonical_translate(ds: DifferenceSet) -> DifferenceSet:
    """Lexicographically least translate D + t, the orbit representative."""
    best = min(
        tuple(sorted((r + t) % ds.n for r in ds.residues))
        for t in range(ds.n)
    )
    return DifferenceSet(n=ds.n, residues=best)


def is_orbit_representative(ds: DifferenceSet) -> bool:
    return canonical_translate(ds).residues == ds.residues


def develop(ds: DifferenceSet) -> IncidenceStructure:
    """Lines are the n translates D + i; requires a perfect difference set."""
    if not verify_difference_set(ds).ok:
        raise NotPerfect(f"{list(ds.residues)} mod {ds.n} is not a perfect difference set")
    lines = {
        tuple(sorted((d + i) % ds.n for d in ds.residues))
        for i in range(ds.n)
    }
    return IncidenceStructure(
        point_count=ds.n,
        lines=tuple(sorted(lines)),
        point_labels=tuple(str(i) for i in range(ds.n)),
        origin=("developed", ds.n, ds.residues),
    )


def singer_shift_check(s: IncidenceStructure) -> bool:
    """Does x -> x+1 mod n map every line to a line and act as a single n-cycle?"""
    if s.origin[0] != "developed":
        raise WrongOrigin("expected a structure developed from a difference set")
    n = s.origin[1]
    line_set = set(s.lines)
    for line in s.lines:
        shifted = tuple(sorted((p + 1) % n for p in line))
        if shifted not in line_set:
            return False
    # the shift must be a single cycle on points
    x, seen = 0, 0
    while True:
        x = (x + 1) % n
        seen += 1
        if x == 0:
            break
    return seen == n
