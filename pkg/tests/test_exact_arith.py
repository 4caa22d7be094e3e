import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kahler_spectra.exact_arith import (
    binom_ext, compare, format_rational, parse_rational, pascal_row,
)


@pytest.mark.parametrize("u, v, expected", [
    (16, 2, 120),
    (14, -1, 0),
    (12, 0, 1),
    (0, 2, 0),
    (0, 0, 1),
    (-4, 0, 1),
    (-4, -2, 0),
    (-3, 2, 0),
    (5, 7, 0),
])
def test_binom_ext_examples(u, v, expected):
    assert binom_ext(u, v) == expected


def _factorial_binom(u, v):
    return math.factorial(u) // (math.factorial(v) * math.factorial(u - v))


@given(st.integers(0, 300), st.integers(0, 300))
def test_binom_ext_matches_factorials(u, v):
    if v <= u:
        assert binom_ext(u, v) == _factorial_binom(u, v)
    else:
        assert binom_ext(u, v) == 0


@given(st.integers(1, 5000), st.data())
def test_pascal_recurrence(u, data):
    v = data.draw(st.integers(1, u))
    assert binom_ext(u, v) == binom_ext(u - 1, v - 1) + binom_ext(u - 1, v)


@given(st.integers(0, 5000), st.data())
def test_binom_symmetry(u, data):
    v = data.draw(st.integers(0, u))
    assert binom_ext(u, v) == binom_ext(u, u - v)


def test_large_arguments_fall_back_to_comb():
    assert binom_ext(10000, 3) == math.comb(10000, 3)
    assert pascal_row(6) == (1, 6, 15, 20, 15, 6, 1)


rationals = st.fractions(max_denominator=10**6).filter(lambda q: abs(q) < 10**9)


def test_ring_examples():
    assert Fraction(1, 6) + Fraction(1, 3) == Fraction(1, 2)
    z = Fraction(2, 3) * 0
    assert (z.numerator, z.denominator) == (0, 1)
    assert compare(Fraction(-13, 1680), Fraction(0)) == -1


def test_division_by_zero_is_reported():
    with pytest.raises(ZeroDivisionError):
        Fraction(1, 3) / Fraction(0)


@given(rationals, rationals, rationals)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    if a != 0:
        assert a * (1 / a) == 1


@given(rationals)
def test_stored_reduced(q):
    assert q.denominator > 0
    assert math.gcd(abs(q.numerator), q.denominator) == 1


@given(rationals)
def test_serialization_round_trip(q):
    text = format_rational(q)
    assert parse_rational(text) == q
    if q.denominator == 1:
        assert "/" not in text


@pytest.mark.parametrize("text, expected", [
    ("-13/1680", Fraction(-13, 1680)),
    ("4", Fraction(4)),
    ("6/4", Fraction(3, 2)),
])
def test_parse(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["1.5", "a/b", "1/-2", "", "1e3"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_parse_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        parse_rational("3/0")


def test_format_negative():
    assert format_rational(Fraction(-13, 1680)) == "-13/1680"
