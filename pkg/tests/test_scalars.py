from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from virrep.scalars import GaussianRational as G
from virrep.scalars import conj, format_rational, parse_rational

rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=50
)
gaussians = st.builds(G, rationals, rationals)


def test_rational_product():
    assert G(F(1, 2)) * G(F(1, 3)) == G(F(1, 6))


def test_i_squared():
    i = G(0, 1)
    assert i * i == G(-1)


def test_division_by_conjugate():
    # (1+i)/(1-i) = i, by multiplying through with the conjugate
    assert G(1, 1) / G(1, -1) == G(0, 1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        G(1) / G(0)


def test_conjugate_examples():
    assert G(F(1, 2), F(1, 3)).conjugate() == G(F(1, 2), F(-1, 3))
    assert G(0).conjugate() == G(0)
    a = G(2, -5)
    assert a.conjugate().conjugate() == a


def test_immutable():
    a = G(1, 2)
    with pytest.raises(AttributeError):
        a.re = F(3)


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a + (-a) == G(0)
    if not b.is_zero():
        assert (a / b) * b == a


@given(gaussians, gaussians)
def test_conj_is_ring_automorphism(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()


@given(gaussians)
def test_canonical_equality(a):
    # equal values are indistinguishable: same hash, componentwise identical
    b = G(a.re, a.im)
    assert a == b
    assert hash(a) == hash(b)


@given(gaussians)
def test_norm2_is_conj_product(a):
    assert (a.conjugate() * a) == G(a.norm2())


def test_conj_helper_passes_plain_rationals_through():
    assert conj(F(3, 7)) == F(3, 7)
    assert conj(G(1, 2)) == G(1, -2)


@pytest.mark.parametrize(
    "text,value",
    [("1/2", F(1, 2)), ("-3/4", F(-3, 4)), ("7", F(7)), ("-2", F(-2)), ("3/6", F(1, 2))],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["1.5", "a", "1/ 2", "1//2", "", "1/-2", "0x3"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_format_rational():
    assert format_rational(F(1, 2)) == "1/2"
    assert format_rational(F(10, 5)) == "2"
    assert format_rational(F(-3, 9)) == "-1/3"


@given(rationals)
def test_parse_format_round_trip(x):
    assert parse_rational(format_rational(x)) == x


def test_json_round_trip():
    a = G(F(1, 2), F(-5, 3))
    assert G.from_json(a.to_json()) == a
    assert a.to_json() == {"re": "1/2", "im": "-5/3"}
