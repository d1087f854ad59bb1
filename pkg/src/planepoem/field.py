"""Exact arithmetic in the small Galois fields GF(q), q = p^k <= 9.

Elements are represented as integers in [0, q): the base-p digit vector of
the element's polynomial-basis coordinates. For prime fields this is just
the residue itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field

SUPPORTED_ORDERS = (2, 3, 4, 5, 7, 8, 9)

# Fixed monic irreducible reduction polynomials, constant term first.
# Pinned so that element encodings are reproducible across runs.
_REDUCTION_POLYS = {
    4: (1, 1, 1),     # t^2 + t + 1 over GF(2)
    8: (1, 1, 0, 1),  # t^3 + t + 1 over GF(2)
    9: (1, 0, 1),     # t^2 + 1 over GF(3)
}


class UnsupportedOrder(ValueError):
    """Field order outside {2,3,4,5,7,8,9}."""


class DivisionByZero(ZeroDivisionError):
    """Inversion of the zero element."""


class SpecMismatch(ValueError):
    """Element representative out of range for this field."""


def _to_digits(rep: int, p: int, k: int) -> list[int]:
    digits = []
    for _ in range(k):
        digits.append(rep % p)
        rep //= p
    return digits


def _from_digits(digits: list[int], p: int) -> int:
    rep = 0
    for d in reversed(digits):
        rep = rep * p + d
    return rep


@dataclass(frozen=True)
class FieldSpec:
    """A finite field GF(p^k) with a fixed reduction polynomial."""

    p: int
    k: int
    q: int
    reduction_poly: tuple[int, ...]
    _mul_table: tuple[tuple[int, ...], ...] = field(compare=False, repr=False, default=())

    def check(self, *reps: int) -> None:
        for r in reps:
            if not 0 <= r < self.q:
                raise SpecMismatch(f"representative {r} not in [0, {self.q})")

    def add(self, a: int, b: int) -> int:
        self.check(a, b)
        if self.k == 1:
            return (a + b) % self.p
        da = _to_digits(a, self.p, self.k)
        db = _to_digits(b, self.p, self.k)
        return _from_digits([(x + y) % self.p for x, y in zip(da, db)], self.p)

    def neg(self, a: int) -> int:
        self.check(a)
        if self.k == 1:
            return (-a) % self.p
        da = _to_digits(a, self.p, self.k)
        return _from_digits([(-x) % self.p for x in da], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self.check(a, b)
        return self._mul_table[a][b]

    def inv(self, a: int) -> int:
        self.check(a)
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        # q <= 9: exhaustive search is the simplest correct method
        for b in range(1, self.q):
            if self._mul_table[a][b] == 1:
                return b
        raise AssertionError("no inverse found; field tables corrupt")

    def pow(self, a: int, e: int) -> int:
        self.check(a)
        result = 1
        for _ in range(e):
            result = self._mul_table[result][a]
        return result

    def elements(self) -> list[int]:
        """All q elements in ascending representative order (0 first, 1 second)."""
        return list(range(self.q))


def _poly_mul_mod(da: list[int], db: list[int], poly: tuple[int, ...], p: int) -> list[int]:
    k = len(poly) - 1
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(da):
        if x == 0:
            continue
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    # reduce by the monic polynomial: t^k = -(poly[0] + ... + poly[k-1] t^(k-1))
    for deg in range(len(prod) - 1, k - 1, -1):
        c = prod[deg]
        if c == 0:
            continue
        prod[deg] = 0
        for j in range(k):
            prod[deg - k + j] = (prod[deg - k + j] - c * poly[j]) % p
    return prod[:k]


def make_field(q: int) -> FieldSpec:
    """Construct GF(q) with its pinned reduction polynomial."""
    if q not in SUPPORTED_ORDERS:
        raise UnsupportedOrder(f"unsupported field order {q}; expected one of {SUPPORTED_ORDERS}")
    if q in (2, 3, 5, 7):
        p, k = q, 1
        poly = (0, 1)  # t, unused for prime fields
        table = tuple(tuple((a * b) % p for b in range(q)) for a in range(q))
    else:
        poly = _REDUCTION_POLYS[q]
        k = len(poly) - 1
        p = round(q ** (1 / k))
        rows = []
        for a in range(q):
            da = _to_digits(a, p, k)
            row = []
            for b in range(q):
                db = _to_digits(b, p, k)
                row.append(_from_digits(_poly_mul_mod(da, db, poly, p), p))
            rows.append(tuple(row))
        table = tuple(rows)
    return FieldSpec(p=p, k=k, q=q, reduction_poly=poly, _mul_table=table)
