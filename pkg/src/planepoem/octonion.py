"""Octonion basis multiplication from an oriented Fano plane.

Basis is (u, f0..f6): u is the real unit, f_i the imaginary unit at Fano
point i. A directed cycle a -> b -> c fixes f_a f_b = f_c and its two
rotations; distinct imaginary units anticommute and each squares to -u.
Coefficients are exact rationals so the algebra identities are checked
exactly, not approximately.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

# the oriented line list: each cycle reads a -> b -> c
PAPER_CYCLES = ((3, 1, 0), (0, 2, 6), (0, 5, 4), (3, 4, 6), (2, 5, 3), (2, 1, 4), (1, 5, 6))

FANO_LINE_SETS = frozenset(
    frozenset(t) for t in ((0, 1, 3), (0, 4, 5), (0, 2, 6), (1, 5, 6), (1, 2, 4), (3, 4, 6), (2, 3, 5))
)

BASIS_LABELS = ("u", "f0", "f1", "f2", "f3", "f4", "f5", "f6")


class InvalidOrientation(ValueError):
    """Cycles do not orient the Fano line set consistently."""


@dataclass(frozen=True)
class OrientedFano:
    cycles: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        triples = [frozenset(c) for c in self.cycles]
        if len(self.cycles) != 7 or any(len(t) != 3 for t in triples):
            raise InvalidOrientation("need 7 directed 3-cycles")
        if set(triples) != FANO_LINE_SETS or len(set(triples)) != 7:
            raise InvalidOrientation("underlying triples must be the Fano line set")
        pair_count = {}
        for cycle in self.cycles:
            for a, b in itertools.combinations(sorted(cycle), 2):
                pair_count[(a, b)] = pair_count.get((a, b), 0) + 1
        if any(c != 1 for c in pair_count.values()) or len(pair_count) != 21:
            raise InvalidOrientation("every unordered pair must occur in exactly one cycle")


def paper_orientation() -> OrientedFano:
    return OrientedFano(cycles=PAPER_CYCLES)


@dataclass(frozen=True)
class OctonionTable:
    """products[(i, j)] = (sign, k): basis_i * basis_j = sign * basis_k.

    Indices 0..7 over BASIS_LABELS (0 is the real unit u).
    """

    products: tuple[tuple[tuple[int, int], ...], ...]

    def product(self, i: int, j: int) -> tuple[int, int]:
        return self.products[i][j]


def build_table(o: OrientedFano) -> OctonionTable:
    entries: dict[tuple[int, int], tuple[int, int]] = {}

    def assign(i, j, sign, k):
        if (i, j) in entries and entries[(i, j)] != (sign, k):
            raise InvalidOrientation(f"conflicting product for ({BASIS_LABELS[i]}, {BASIS_LABELS[j]})")
        entries[(i, j)] = (sign, k)

    for i in range(8):
        assign(0, i, 1, i)
        assign(i, 0, 1, i)
    for i in range(1, 8):
        assign(i, i, -1, 0)
    for a, b, c in o.cycles:
        fa, fb, fc = a + 1, b + 1, c + 1
        for x, y, z in ((fa, fb, fc), (fb, fc, fa), (fc, fa, fb)):
            assign(x, y, 1, z)
            assign(y, x, -1, z)
    rows = tuple(tuple(entries[(i, j)] for j in range(8)) for i in range(8))
    return OctonionTable(products=rows)


def table_doc(t: OctonionTable) -> dict:
    """The signed 8x8 table with entries like '+f0' / '-u'."""
    matrix = [
        [("+" if sign > 0 else "-") + BASIS_LABELS[k] for sign, k in row]
        for row in t.products
    ]
    return {"basis": list(BASIS_LABELS), "products": matrix}


@dataclass(frozen=True)
class Octonion:
    """Coefficients (c_u, c_f0, ..., c_f6), exact rationals."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coefficients) != 8:
            raise ValueError("octonions have 8 coefficients")


def octonion(*coeffs) -> Octonion:
    return Octonion(coefficients=tuple(Fraction(c) for c in coeffs))


def basis_element(i: int) -> Octonion:
    coeffs = [Fraction(0)] * 8
    coeffs[i] = Fraction(1)
    return Octonion(coefficients=tuple(coeffs))


def oct_add(x: Octonion, y: Octonion) -> Octonion:
    return Octonion(tuple(a + b for a, b in zip(x.coefficients, y.coefficients)))


def oct_mul(x: Octonion, y: Octonion, t: OctonionTable) -> Octonion:
    out = [Fraction(0)] * 8
    for i, ci in enumerate(x.coefficients):
        if ci == 0:
            continue
        for j, cj in enumerate(y.coefficients):
            if cj == 0:
                continue
            sign, k = t.products[i][j]
            out[k] += sign * ci * cj
    return Octonion(coefficients=tuple(out))


def oct_conj(x: Octonion) -> Octonion:
    c = x.coefficients
    return Octonion(coefficients=(c[0],) + tuple(-v for v in c[1:]))


def oct_norm2(x: Octonion) -> Fraction:
    return sum(c * c for c in x.coefficients)


def _random_octonion(rng: random.Random) -> Octonion:
    return Octonion(
        coefficients=tuple(
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(8)
        )
    )


def algebra_report(t: OctonionTable, samples: int = 1000, seed: int = 20240513) -> dict:
    """Check alternativity, associativity, commutativity, norm multiplicativity.

    Basis identities are exhaustive; rational identities use exact sampled
    coefficients. Failed laws come with explicit witnesses.
    """
    rng = random.Random(seed)
    basis = [basis_element(i) for i in range(8)]

    alternative = True
    alt_witness = None
    for i, j in itertools.product(range(8), repeat=2):
        x, y = basis[i], basis[j]
        left = oct_mul(x, oct_mul(x, y, t), t) == oct_mul(oct_mul(x, x, t), y, t)
        right = oct_mul(oct_mul(y, x, t), x, t) == oct_mul(y, oct_mul(x, x, t), t)
        if not (left and right):
            alternative = False
            alt_witness = (BASIS_LABELS[i], BASIS_LABELS[j])
            break
    if alternative:
        for _ in range(32):
            x, y = _random_octonion(rng), _random_octonion(rng)
            left = oct_mul(x, oct_mul(x, y, t), t) == oct_mul(oct_mul(x, x, t), y, t)
            right = oct_mul(oct_mul(y, x, t), x, t) == oct_mul(y, oct_mul(x, x, t), t)
            if not (left and right):
                alternative = False
                alt_witness = (x.coefficients, y.coefficients)
                break

    assoc_witness = None
    for i, j, k in itertools.product(range(1, 8), repeat=3):
        lhs = oct_mul(oct_mul(basis[i], basis[j], t), basis[k], t)
        rhs = oct_mul(basis[i], oct_mul(basis[j], basis[k], t), t)
        if lhs != rhs:
            assoc_witness = (BASIS_LABELS[i], BASIS_LABELS[j], BASIS_LABELS[k])
            break

    comm_witness = None
    for i, j in itertools.combinations(range(1, 8), 2):
        if oct_mul(basis[i], basis[j], t) != oct_mul(basis[j], basis[i], t):
            comm_witness = (BASIS_LABELS[i], BASIS_LABELS[j])
            break

    norm_multiplicative = True
    norm_witness = None
    for _ in range(samples):
        x, y = _random_octonion(rng), _random_octonion(rng)
        if oct_norm2(oct_mul(x, y, t)) != oct_norm2(x) * oct_norm2(y):
            norm_multiplicative = False
            norm_witness = (x.coefficients, y.coefficients)
            break

    return {
        "alternative": alternative,
        "associative": assoc_witness is None,
        "commutative": comm_witness is None,
        "norm_multiplicative": norm_multiplicative,
        "witnesses": {
            "alternative": alt_witness,
            "associative": assoc_witness,
            "commutative": comm_witness,
            "norm_multiplicative": norm_witness,
        },
    }
