"""Exact cyclotomic arithmetic: spec examples, field axioms, canonical forms."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from greenring.cyclotomic import (
    Cyclotomic,
    cyclotomic_polynomial,
    euler_phi,
    order_of_root,
    rational,
    two_cos_pi_over,
    zeta,
)
from greenring.errors import InvalidConductorError


def test_unit_and_minus_one():
    assert zeta(1, 0) == 1
    assert zeta(4, 2) == -1


def test_invalid_conductor():
    with pytest.raises(InvalidConductorError):
        zeta(0)


def test_canonical_zero_and_one_vectors():
    one = zeta(12, 0)
    assert one.coeffs == (1,) + (0,) * 3
    zero = one - one
    assert zero.coeffs == (0,) * 4
    assert zero.is_zero() and not zero


def test_mixed_conductor_product():
    # zeta12^7 = zeta3 * zeta4, checked exactly and against the complex embedding
    lhs = zeta(12, 7)
    rhs = zeta(3) * zeta(4)
    assert lhs == rhs
    assert abs(lhs.to_complex() - zeta(3).to_complex() * zeta(4).to_complex()) < 1e-9


def test_basic_field_ops():
    assert zeta(3) + zeta(3, 2) == -1
    assert zeta(5) * zeta(5, 4) == 1
    assert rational(2).inverse() == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        rational(0).inverse()


def test_orders():
    assert order_of_root(zeta(6)) == 6
    assert order_of_root(rational(-1)) == 2
    assert order_of_root(rational(2)) is None
    assert order_of_root(rational(1)) == 1
    assert order_of_root(rational(0)) is None
    assert order_of_root(zeta(12, 8)) == 3


def test_order_by_repeated_multiplication():
    for n in (3, 4, 6, 8, 12):
        for k in range(1, n):
            x = zeta(n, k)
            order = order_of_root(x)
            power = rational(1)
            for step in range(1, order):
                power = power * x
                assert power != 1, (n, k, step)
            assert power * x == 1


def test_embedding_roundtrip():
    x = zeta(6) - 2 * zeta(6, 5) + Fraction(1, 3)
    assert x.embed(12).embed(24) == x
    with pytest.raises(InvalidConductorError):
        x.embed(8)


def test_two_cos():
    assert two_cos_pi_over(2) == 0
    assert two_cos_pi_over(3) == 1
    x = two_cos_pi_over(5)
    assert x == x.conj()  # real
    assert abs(x.to_complex().real - 2 * __import__("math").cos(__import__("math").pi / 5)) < 1e-9


def test_conjugation_is_inverse_on_roots():
    for n in (5, 8, 12):
        x = zeta(n)
        assert x * x.conj() == 1


def test_json_roundtrip():
    x = zeta(12, 7) - Fraction(2, 3) * zeta(12, 2) + 5
    data = x.to_json()
    assert data["conductor"] == 12
    exps = [t[0] for t in data["terms"]]
    assert exps == sorted(exps)
    assert all(den > 0 for _, _, den in data["terms"])
    assert Cyclotomic.from_json(data) == x


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert len(cyclotomic_polynomial(60)) - 1 == euler_phi(60) == 16


_conductors = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 16, 20, 24, 30, 40, 60])


@st.composite
def cyclotomics(draw):
    n = draw(_conductors)
    deg = euler_phi(n)
    coeffs = draw(
        st.lists(
            st.integers(min_value=-4, max_value=4).map(Fraction),
            min_size=deg,
            max_size=deg,
        )
    )
    return Cyclotomic(n, coeffs)


@settings(max_examples=60, deadline=None)
@given(cyclotomics(), cyclotomics(), cyclotomics())
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z


@settings(max_examples=40, deadline=None)
@given(cyclotomics())
def test_inverses(x):
    if x.is_zero():
        return
    assert x * x.inverse() == 1
    assert (x.inverse()).inverse() == x


@settings(max_examples=40, deadline=None)
@given(cyclotomics())
def test_float_embedding_consistency(x):
    # the debug embedding agrees with exact arithmetic on squares
    exact = (x * x).to_complex()
    approx = x.to_complex() ** 2
    assert abs(exact - approx) < 1e-6 * (1 + abs(exact))
