import itertools

import pytest

from planepoem.field import (
    SUPPORTED_ORDERS,
    DivisionByZero,
    SpecMismatch,
    UnsupportedOrder,
    make_field,
)


def test_make_field_prime():
    spec = make_field(2)
    assert (spec.p, spec.k, spec.q) == (2, 1, 2)


def test_make_field_gf4_poly():
    spec = make_field(4)
    assert (spec.p, spec.k) == (2, 2)
    assert spec.reduction_poly == (1, 1, 1)  # t^2 + t + 1


@pytest.mark.parametrize("q", [0, 1, 6, 10, 16, 25])
def test_make_field_rejects_non_supported(q):
    with pytest.raises(UnsupportedOrder):
        make_field(q)


def test_gf7_examples():
    gf = make_field(7)
    assert gf.add(3, 5) == 1
    assert gf.inv(3) == 5


def test_gf4_t_squared():
    gf = make_field(4)
    # rep 2 encodes t; t^2 = t + 1 = rep 3 under t^2 + t + 1
    assert gf.mul(2, 2) == 3


def test_elements_order():
    for q in SUPPORTED_ORDERS:
        elems = make_field(q).elements()
        assert len(elems) == q
        assert elems[0] == 0 and elems[1] == 1
        assert elems == sorted(elems)


@pytest.mark.parametrize("q", SUPPORTED_ORDERS)
def test_field_axioms_exhaustive(q):
    gf = make_field(q)
    elems = gf.elements()
    for a, b in itertools.product(elems, repeat=2):
        assert gf.add(a, b) == gf.add(b, a)
        assert gf.mul(a, b) == gf.mul(b, a)
    for a, b, c in itertools.product(elems, repeat=3):
        assert gf.add(gf.add(a, b), c) == gf.add(a, gf.add(b, c))
        assert gf.mul(gf.mul(a, b), c) == gf.mul(a, gf.mul(b, c))
        assert gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c))


@pytest.mark.parametrize("q", SUPPORTED_ORDERS)
def test_inverses_and_group_order(q):
    gf = make_field(q)
    for a in range(1, q):
        assert gf.mul(a, gf.inv(a)) == 1
        assert gf.pow(a, q - 1) == 1


@pytest.mark.parametrize("q", SUPPORTED_ORDERS)
def test_characteristic(q):
    gf = make_field(q)
    total = 0
    for _ in range(gf.p):
        total = gf.add(total, 1)
    assert total == 0


@pytest.mark.parametrize("q", SUPPORTED_ORDERS)
def test_additive_negation(q):
    gf = make_field(q)
    for a in gf.elements():
        assert gf.add(a, gf.neg(a)) == 0


def test_inv_of_zero():
    with pytest.raises(DivisionByZero):
        make_field(5).inv(0)


def test_out_of_range_rep():
    with pytest.raises(SpecMismatch):
        make_field(3).add(1, 5)
