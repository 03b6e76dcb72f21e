import pytest
from hypothesis import given
from hypothesis import strategies as st

from burau4.burau import A, B, GEN, GEN_INV, T, T_BAR, D, burau_eval
from burau4.braid import BraidWord
from burau4.laurent import LaurentPoly, parse_laurent
from burau4.matrix3 import IDENTITY, Mat3, NonMonomialEntry, as_scalar, canonicalize, det, mat_mul, parse_matrix

from conftest import braid_words

t4 = LaurentPoly.monomial(1, 4)


def test_T_has_order_four():
    assert mat_mul(mat_mul(T, T), mat_mul(T, T)) == IDENTITY
    assert T * T != IDENTITY


def test_identity_law():
    assert IDENTITY * B == B and B * IDENTITY == B


def test_generator_inverse():
    # inverse of the 2x2 block [[-t, t], [0, 1]] is [[-1/t, 1], [0, 1]]
    assert GEN[1] * GEN_INV[1] == IDENTITY
    assert GEN_INV[1] * GEN[1] == IDENTITY


def test_det_examples():
    assert det(GEN[1]) == parse_laurent("-t")
    assert det(IDENTITY) == parse_laurent("1")
    assert det(T) == parse_laurent("-1")
    assert det(T_BAR) == parse_laurent("-t^3")


def test_as_scalar_examples():
    assert as_scalar(Mat3.scalar(t4)) == t4
    assert as_scalar(B) is None
    assert as_scalar(D * D) == t4
    assert as_scalar(parse_matrix("t, 0, 0; 0, t, 0; 0, 0, -t")) is None
    assert as_scalar(parse_matrix("1, 0, 0; 0, 1, 1; 0, 0, 1")) is None


def test_canonicalize_examples():
    m = T_BAR * D
    assert canonicalize(m.shift(3)) == canonicalize(m)
    assert canonicalize(-m) == canonicalize(m)
    assert canonicalize(T_BAR) == canonicalize(T)
    assert canonicalize(T_BAR, monomial_only=True) == canonicalize(T, monomial_only=True)
    assert canonicalize(T) != canonicalize(B)


def test_canonicalize_monomial_guard():
    with pytest.raises(NonMonomialEntry):
        canonicalize(A, monomial_only=True)
    # without the guard any matrix gets a key
    canonicalize(A)


@given(braid_words(8), st.integers(-10, 10), st.sampled_from([1, -1]))
def test_canonicalize_is_projective(w, e, s):
    m = burau_eval(BraidWord(w))
    assert canonicalize(m * LaurentPoly.monomial(s, e)) == canonicalize(m)


@given(braid_words(6), braid_words(6))
def test_det_multiplicative(u, v):
    a, b = burau_eval(BraidWord(u)), burau_eval(BraidWord(v))
    assert det(a * b) == det(a) * det(b)


@given(braid_words(5), braid_words(5), braid_words(5))
def test_mul_associative(u, v, w):
    a, b, c = (burau_eval(BraidWord(x)) for x in (u, v, w))
    assert (a * b) * c == a * (b * c)


@given(braid_words(8), st.integers(-6, 6))
def test_scalars_commute(w, e):
    c = Mat3.scalar(LaurentPoly([1, -2, 3], e))
    assert as_scalar(c) is not None
    m = burau_eval(BraidWord(w))
    assert c * m == m * c


@given(braid_words(12))
def test_text_round_trip(w):
    m = burau_eval(BraidWord(w))
    assert parse_matrix(str(m)) == m
    assert str(parse_matrix(str(m))) == str(m)


def test_text_format():
    assert str(T_BAR) == "-t, t, 0; -t, 0, t; -t, 0, 0"
    with pytest.raises(ValueError):
        parse_matrix("1, 0; 0, 1")
    with pytest.raises(ValueError):
        parse_matrix("1, 0, 0; 0, 1, 0")


def test_negative_power_refused():
    with pytest.raises(ValueError):
        T ** -1
