"""Integer Laurent polynomials in one variable ``t``.

A polynomial is stored densely as ``(min_deg, coeffs)`` where ``coeffs[j]`` is
the coefficient of ``t**(min_deg + j)``.  Values are kept canonical: nonzero
polynomials have nonzero first and last coefficients, and zero is
``(0, ())``.  Equal values therefore have equal representations, which makes
``==`` and ``hash`` cheap and exact.
"""

from __future__ import annotations

import re
from typing import Iterable, Optional, Tuple

__all__ = [
    "LaurentPoly",
    "ZERO",
    "ONE",
    "T",
    "add",
    "mul",
    "is_unit_monomial",
    "parse_laurent",
]


class LaurentPoly:
    __slots__ = ("min_deg", "coeffs")

    def __init__(self, coeffs: Iterable[int] = (), min_deg: int = 0):
        c = [int(x) for x in coeffs]
        lo, hi = 0, len(c)
        while lo < hi and c[lo] == 0:
            lo += 1
        while hi > lo and c[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            self.min_deg, self.coeffs = 0, ()
        else:
            self.min_deg, self.coeffs = min_deg + lo, tuple(c[lo:hi])

    @classmethod
    def _raw(cls, min_deg: int, coeffs: Tuple[int, ...]) -> "LaurentPoly":
        # caller guarantees canonical form
        p = object.__new__(cls)
        p.min_deg = min_deg
        p.coeffs = coeffs
        return p

    @classmethod
    def monomial(cls, coeff: int, exponent: int) -> "LaurentPoly":
        """``coeff * t**exponent``."""
        if coeff == 0:
            return ZERO
        return cls._raw(exponent, (coeff,))

    @classmethod
    def from_dict(cls, terms: dict) -> "LaurentPoly":
        """Build from a ``{exponent: coefficient}`` mapping."""
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return ZERO
        lo, hi = min(terms), max(terms)
        return cls([terms.get(e, 0) for e in range(lo, hi + 1)], lo)

    def __reduce__(self):
        return (LaurentPoly._raw, (self.min_deg, self.coeffs))

    # -- inspection ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        """Highest exponent present. Raises ``ValueError`` on zero."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return self.min_deg + len(self.coeffs) - 1

    @property
    def low_degree(self) -> int:
        """Lowest exponent present. Raises ``ValueError`` on zero."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no low degree")
        return self.min_deg

    def terms(self):
        """Yield ``(exponent, coefficient)`` pairs with nonzero coefficient."""
        for j, c in enumerate(self.coeffs):
            if c:
                yield self.min_deg + j, c

    def to_dict(self) -> dict:
        return dict(self.terms())

    def is_monomial(self) -> bool:
        """True iff the value is ``c * t**e`` for some nonzero integer ``c``."""
        return len(self.coeffs) == 1

    def is_unit_monomial(self) -> Optional[Tuple[int, int]]:
        """Return ``(sign, e)`` if the value is ``sign * t**e`` with sign = +-1."""
        if len(self.coeffs) == 1 and self.coeffs[0] in (1, -1):
            return self.coeffs[0], self.min_deg
        return None

    def evaluate(self, t):
        """Evaluate at ``t`` (any object supporting ``**`` with ints, e.g. Fraction)."""
        return sum(c * t**e for e, c in self.terms())

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            if isinstance(other, int):
                other = LaurentPoly.monomial(other, 0)
            else:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a:
            return other
        if not b:
            return self
        da, db = self.min_deg, other.min_deg
        lo = min(da, db)
        hi = max(da + len(a), db + len(b))
        out = [0] * (hi - lo)
        off = da - lo
        for j, x in enumerate(a):
            out[off + j] = x
        off = db - lo
        for j, x in enumerate(b):
            out[off + j] += x
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.min_deg, tuple(-x for x in self.coeffs))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.monomial(other, 0)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            if isinstance(other, int):
                if other == 0:
                    return ZERO
                return LaurentPoly._raw(self.min_deg, tuple(other * x for x in self.coeffs))
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        deg = self.min_deg + other.min_deg
        # Z has no zero divisors, so end coefficients stay nonzero
        if len(a) == 1:
            x = a[0]
            return LaurentPoly._raw(deg, b if x == 1 else tuple(x * y for y in b))
        if len(b) == 1:
            y = b[0]
            return LaurentPoly._raw(deg, a if y == 1 else tuple(x * y for x in a))
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPoly._raw(deg, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            unit = self.is_unit_monomial()
            if unit is None:
                raise ValueError("only unit monomials have inverses in Z[t, 1/t]")
            s, e = unit
            return LaurentPoly.monomial(s ** (-n), e * n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, e: int) -> "LaurentPoly":
        """Multiply by ``t**e``."""
        if not self.coeffs:
            return self
        return LaurentPoly._raw(self.min_deg + e, self.coeffs)

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.min_deg == other.min_deg and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == LaurentPoly.monomial(other, 0)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.min_deg, self.coeffs))

    # -- text ------------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.terms():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        return parse_laurent(text)


ZERO = LaurentPoly._raw(0, ())
ONE = LaurentPoly._raw(0, (1,))
T = LaurentPoly._raw(1, (1,))


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def is_unit_monomial(a: LaurentPoly) -> Optional[Tuple[int, int]]:
    return a.is_unit_monomial()


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coef>\d+)\s*(?:\*\s*(?P<var1>t)(?:\s*\^\s*(?P<exp1>[+-]?\d+))?)?
          | (?P<var2>t)(?:\s*\^\s*(?P<exp2>[+-]?\d+))?
        )\s*""",
    re.VERBOSE,
)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the rendering produced by ``str``, e.g. ``-t^-1 + 1 + 2*t^3``.

    Whitespace is optional.  Repeated exponents are summed.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    terms: dict = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group("coef") is None and m.group("var2") is None):
            raise ValueError(f"cannot parse Laurent polynomial at column {pos + 1}: {text!r}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing '+' or '-' at column {pos + 1}: {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            coef = int(m.group("coef"))
            if m.group("var1"):
                exp = int(m.group("exp1")) if m.group("exp1") is not None else 1
            else:
                exp = 0
        else:
            coef = 1
            exp = int(m.group("exp2")) if m.group("exp2") is not None else 1
        terms[exp] = terms.get(exp, 0) + sign * coef
        pos = m.end()
        first = False
    return LaurentPoly.from_dict(terms)
