"""The reduced Burau representation of B4 and the constant matrices around it.

Evaluation convention: a word is read left to right and each new letter's
matrix multiplies on the *left*, so ``rho(g1 g2 ... gn) = rho(gn) ... rho(g1)``.
This is the only order under which ``rho(sigma1 sigma2 sigma3)`` and
``rho(sigma3 sigma1^-1)`` come out as the reference matrices ``T_BAR`` and
``B``; both are pinned in the test-suite.
"""

from __future__ import annotations

from typing import List, Optional

from .braid import ALPHA, BETA, DELTA, TAU, THETA, BraidWord, Check
from .laurent import LaurentPoly
from .matrix3 import IDENTITY, Mat3, parse_matrix

__all__ = [
    "GEN",
    "GEN_INV",
    "A",
    "B",
    "T",
    "T_BAR",
    "D",
    "letter_matrix",
    "burau_eval",
    "Check",
    "verify_paper_identities",
]

GEN = {
    1: parse_matrix("-t, t, 0; 0, 1, 0; 0, 0, 1"),
    2: parse_matrix("1, 0, 0; 1, -t, t; 0, 0, 1"),
    3: parse_matrix("1, 0, 0; 0, 1, 0; 0, 1, -t"),
}

# inverses solved by hand; each only differs from I in one row
GEN_INV = {
    1: parse_matrix("-t^-1, 1, 0; 0, 1, 0; 0, 0, 1"),
    2: parse_matrix("1, 0, 0; t^-1, -t^-1, 1; 0, 0, 1"),
    3: parse_matrix("1, 0, 0; 0, 1, 0; 0, t^-1, -t^-1"),
}

A = parse_matrix("0, 0, -t^-1; 0, -t, -t^-1 + t; -1, 0, -t^-1 + 1")
B = parse_matrix("-t^-1, 1, 0; 0, 1, 0; 0, 1, -t")
T = parse_matrix("-1, 1, 0; -1, 0, 1; -1, 0, 0")
T_BAR = parse_matrix("-t, t, 0; -t, 0, t; -t, 0, 0")

_LETTER = {**GEN, **{-i: m for i, m in GEN_INV.items()}}


def letter_matrix(g: int) -> Mat3:
    """Matrix of the single letter ``g`` (``+-1..+-3``)."""
    return _LETTER[g]


def burau_eval(w: BraidWord) -> Mat3:
    """Reduced Burau image of ``w`` (reversed-product convention)."""
    m = IDENTITY
    for g in w.letters:
        m = _LETTER[g] * m
    return m


D = burau_eval(DELTA)


def verify_paper_identities(t_matrix: Optional[Mat3] = None) -> List[Check]:
    """Check the matrix-level identities around A, B, T, T_BAR and D exactly.

    ``t_matrix`` replaces the order-four matrix ``T``; tests pass a corrupted
    copy to see the relevant rows fail.  Failures are reported, never raised.
    """
    tm = T if t_matrix is None else t_matrix
    t3 = tm**3  # T^-1, valid exactly when T has order four
    t2 = tm**2
    t4 = Mat3.scalar(LaurentPoly.monomial(1, 4))
    checks = [
        ("T-order", "T^4 = I", tm**4 == IDENTITY),
        ("conj-A", "A = T B T^-1", A == tm * B * t3),
        ("conj-A-inv", "A^-1 = T^-1 B T", A * (t3 * B * tm) == IDENTITY),
        ("conj-B-inv", "B^-1 = T^2 B T^2", B * (t2 * B * t2) == IDENTITY),
        ("Tbar-is-tT", "T_bar = t T", T_BAR == tm.shift(1)),
        ("Tbar-order", "T_bar^4 = t^4 I", T_BAR**4 == t4),
        ("D-square", "D^2 = t^4 I", D * D == t4),
        ("beta-DeltaTau", "B = rho(Delta^-1 tau^2)", B == burau_eval(DELTA.inverse() * TAU**2)),
        ("theta-scalar", "rho(theta) = t^4 I", burau_eval(THETA) == t4),
        ("alpha-image", "rho(alpha) = A", burau_eval(ALPHA) == A),
        ("beta-image", "rho(beta) = B", burau_eval(BETA) == B),
        ("tau-image", "rho(tau) = T_bar", burau_eval(TAU) == T_BAR),
    ]
    return [Check(n, s, bool(ok)) for n, s, ok in checks]
