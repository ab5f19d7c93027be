"""Dyadic rationals: canonical form, arithmetic against Fraction, division rules."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from boxworld.dyadic import Dyadic, dy
from boxworld.errors import NonDyadicDivisionError

dyadics = st.builds(Dyadic, st.integers(-200, 200), st.integers(0, 8))


def test_canonical_form():
    assert Dyadic(2, 1) == Dyadic(1)
    assert Dyadic(2, 1).numerator == 1
    assert Dyadic(2, 1).exponent == 0
    assert Dyadic(12, 2).numerator == 3
    assert Dyadic(0, 5).exponent == 0
    # even integers are canonical at exponent 0
    assert Dyadic(4).numerator == 4
    # odd numerator stays put for positive exponents
    assert Dyadic(3, 4).exponent == 4


def test_negative_exponent_normalizes():
    assert Dyadic(1, -2) == Dyadic(4)


def test_str_and_parse_round_trip():
    for v in (Dyadic(3, 2), Dyadic(-1, 1), Dyadic(0), Dyadic(7), Dyadic(-5, 3)):
        assert Dyadic.parse(str(v)) == v
    assert str(Dyadic(3, 2)) == "3/4"
    assert str(Dyadic(-1, 1)) == "-1/2"
    assert str(Dyadic(2)) == "2"


def test_parse_rejects_non_dyadic():
    with pytest.raises(NonDyadicDivisionError):
        Dyadic.parse("1/3")


@given(dyadics, dyadics)
def test_add_matches_fraction(a, b):
    assert (a + b).as_fraction() == a.as_fraction() + b.as_fraction()


@given(dyadics, dyadics)
def test_mul_matches_fraction(a, b):
    assert (a * b).as_fraction() == a.as_fraction() * b.as_fraction()


@given(dyadics, dyadics)
def test_sub_matches_fraction(a, b):
    assert (a - b).as_fraction() == a.as_fraction() - b.as_fraction()


@given(dyadics, st.integers(0, 6))
def test_division_by_powers_of_two(a, k):
    assert (a / Dyadic(1, k)).as_fraction() == a.as_fraction() * (2**k)
    assert (a / (2**k)).as_fraction() == a.as_fraction() / (2**k)


def test_division_by_non_power_rejected():
    with pytest.raises(NonDyadicDivisionError):
        Dyadic(1) / 3
    with pytest.raises(NonDyadicDivisionError):
        Dyadic(1) / Dyadic(3, 1)
    with pytest.raises(ZeroDivisionError):
        Dyadic(1) / 0


def test_comparisons_and_int_interop():
    assert Dyadic(1, 1) < 1
    assert Dyadic(3, 1) > 1
    assert Dyadic(4, 2) == 1
    assert 1 + Dyadic(1, 1) == Dyadic(3, 1)
    assert 2 * Dyadic(1, 2) == Dyadic(1, 1)


def test_hash_consistent_with_equality():
    assert hash(Dyadic(2, 1)) == hash(Dyadic(1))
    assert len({Dyadic(1, 1), Dyadic(2, 2), Dyadic(1)}) == 2


def test_dy_coercions():
    assert dy("3/4") == Dyadic(3, 2)
    assert dy(5) == Dyadic(5)
    assert dy(Fraction(-1, 8)) == Dyadic(-1, 3)
    with pytest.raises(NonDyadicDivisionError):
        dy(Fraction(1, 6))
