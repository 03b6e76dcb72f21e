from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from burau4.laurent import ONE, ZERO, LaurentPoly, add, is_unit_monomial, mul, parse_laurent

from conftest import small_polys

P = parse_laurent
t = LaurentPoly.monomial(1, 1)


def conv_oracle(a, b):
    # brute-force term-by-term product on {exp: coeff} dicts
    out = {}
    for e1, c1 in a.to_dict().items():
        for e2, c2 in b.to_dict().items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


POINTS = [Fraction(2), Fraction(-3), Fraction(1, 5), Fraction(7, 3)]


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ("t", "-t", "0"),
        ("t^-1", "t", "t^-1 + t"),
        ("-t^-1 + t", "t^-1", "t"),
    ],
)
def test_add_examples(a, b, expected):
    assert add(P(a), P(b)) == P(expected)


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ("-t", "-t^-1", "1"),
        ("t", "0", "0"),
        ("-t^-1 + 1", "t", "-1 + t"),
    ],
)
def test_mul_examples(a, b, expected):
    assert mul(P(a), P(b)) == P(expected)


def test_is_unit_monomial_examples():
    assert is_unit_monomial(P("t^4")) == (1, 4)
    assert is_unit_monomial(P("-t^3")) == (-1, 3)
    assert is_unit_monomial(P("1 + t")) is None
    assert is_unit_monomial(P("2*t")) is None
    assert is_unit_monomial(ZERO) is None


def test_zero_is_canonical():
    z = LaurentPoly([0, 0, 0], 17)
    assert z.min_deg == 0 and z.coeffs == ()
    assert z == ZERO and hash(z) == hash(ZERO)
    assert P("t - t") == ZERO


def test_trimming():
    p = LaurentPoly([0, 0, 3, 0, -1, 0], -2)
    assert p.min_deg == 0 and p.coeffs == (3, 0, -1)
    assert p.low_degree == 0 and p.degree == 2


@given(small_polys(), small_polys())
def test_mul_matches_brute_force(a, b):
    assert (a * b).to_dict() == conv_oracle(a, b)


@given(small_polys(), small_polys())
def test_add_matches_evaluation(a, b):
    for x in POINTS:
        assert (a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x)


@given(small_polys(), small_polys(), small_polys())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a * ONE == a and a + ZERO == a


@given(small_polys())
def test_canonical_form(a):
    again = LaurentPoly(a.coeffs, a.min_deg)
    assert again == a and again.coeffs == a.coeffs and again.min_deg == a.min_deg
    assert a + (-a) == ZERO
    assert (a + (-a)).min_deg == 0
    if a:
        assert a.coeffs[0] != 0 and a.coeffs[-1] != 0


@given(small_polys(), small_polys())
def test_degrees_add(a, b):
    if a and b:
        p = a * b
        assert p.degree == a.degree + b.degree
        assert p.low_degree == a.low_degree + b.low_degree


@given(small_polys(bound=40))
def test_text_round_trip(a):
    assert parse_laurent(str(a)) == a


def test_rendering():
    assert str(P("2*t^3 + 1 - t^-1")) == "-t^-1 + 1 + 2*t^3"
    assert str(ZERO) == "0"
    assert str(P("-t")) == "-t"
    assert str(P("3 - 2*t")) == "3 - 2*t"


@pytest.mark.parametrize(
    "text, expected",
    [
        ("  -t^-1+1 + 2 * t ^ 3 ", {-1: -1, 0: 1, 3: 2}),
        ("t + t", {1: 2}),
        ("-5", {0: -5}),
        ("4*t", {1: 4}),
    ],
)
def test_parse_whitespace_and_merging(text, expected):
    assert parse_laurent(text).to_dict() == expected


@pytest.mark.parametrize("bad", ["", "t t", "x", "2*", "t^", "+"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_laurent(bad)


@given(st.sampled_from([1, -1]), st.integers(-20, 20), st.integers(-4, 4))
def test_unit_monomial_powers(s, e, n):
    u = LaurentPoly.monomial(s, e)
    assert (u**n) * (u ** (-n)) == ONE
    assert is_unit_monomial(u**n) == (s**n if n >= 0 else s ** (-n), e * n)


def test_non_unit_has_no_inverse():
    with pytest.raises(ValueError):
        (ONE + t) ** -1


def test_big_coefficients_do_not_overflow():
    p = (ONE + t) ** 200
    assert p.coeffs[100] == 90548514656103281165404177077484163874504589675413336841320
    assert p.evaluate(1) == 2**200
