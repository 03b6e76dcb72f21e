"""3x3 matrices over the Laurent ring Z[t, 1/t]."""

from __future__ import annotations

from typing import Optional, Sequence, Tuple

from .laurent import ONE, ZERO, LaurentPoly, parse_laurent

__all__ = [
    "Mat3",
    "ProjKey",
    "NonMonomialEntry",
    "IDENTITY",
    "mat_mul",
    "det",
    "as_scalar",
    "canonicalize",
    "parse_matrix",
]


class NonMonomialEntry(ValueError):
    """A matrix passed to a monomial-only routine has a multi-term entry."""


def _poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.monomial(x, 0)
    if isinstance(x, str):
        return parse_laurent(x)
    raise TypeError(f"cannot use {type(x).__name__} as a matrix entry")


class Mat3:
    """Immutable 3x3 matrix; ``entries`` is a row-major tuple of nine polynomials."""

    __slots__ = ("entries",)

    def __init__(self, rows: Sequence[Sequence]):
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("Mat3 needs exactly three rows of three entries")
        self.entries = tuple(_poly(x) for row in rows for x in row)

    @classmethod
    def _raw(cls, entries: Tuple[LaurentPoly, ...]) -> "Mat3":
        m = object.__new__(cls)
        m.entries = entries
        return m

    @classmethod
    def scalar(cls, c: LaurentPoly) -> "Mat3":
        c = _poly(c)
        return cls._raw((c, ZERO, ZERO, ZERO, c, ZERO, ZERO, ZERO, c))

    def __reduce__(self):
        return (Mat3._raw, (self.entries,))

    def __getitem__(self, ij: Tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.entries[3 * i + j]

    def rows(self):
        e = self.entries
        return [list(e[0:3]), list(e[3:6]), list(e[6:9])]

    def __mul__(self, other):
        if isinstance(other, Mat3):
            return mat_mul(self, other)
        if isinstance(other, (LaurentPoly, int)):
            c = _poly(other)
            return Mat3._raw(tuple(c * x for x in self.entries))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return self * other
        return NotImplemented

    def __neg__(self) -> "Mat3":
        return Mat3._raw(tuple(-x for x in self.entries))

    def __add__(self, other: "Mat3") -> "Mat3":
        return Mat3._raw(tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: "Mat3") -> "Mat3":
        return Mat3._raw(tuple(x - y for x, y in zip(self.entries, other.entries)))

    def __pow__(self, n: int) -> "Mat3":
        if n < 0:
            raise ValueError("Mat3 has no general inverse; use the fixed inverse letters")
        result, base = IDENTITY, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, e: int) -> "Mat3":
        """Multiply every entry by ``t**e``."""
        return Mat3._raw(tuple(x.shift(e) for x in self.entries))

    def det(self) -> LaurentPoly:
        return det(self)

    def as_scalar(self) -> Optional[LaurentPoly]:
        return as_scalar(self)

    def canonicalize(self, *, monomial_only: bool = False) -> "ProjKey":
        return canonicalize(self, monomial_only=monomial_only)

    def __eq__(self, other) -> bool:
        if isinstance(other, Mat3):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.entries)

    def __str__(self) -> str:
        e = self.entries
        return "; ".join(", ".join(str(x) for x in e[3 * i : 3 * i + 3]) for i in range(3))

    def __repr__(self) -> str:
        return f"Mat3({str(self)!r})"

    def pretty(self) -> str:
        """Multi-line aligned rendering for terminals."""
        cells = [[str(x) for x in row] for row in self.rows()]
        width = [max(len(cells[i][j]) for i in range(3)) for j in range(3)]
        return "\n".join(
            "[ " + "  ".join(cells[i][j].rjust(width[j]) for j in range(3)) + " ]" for i in range(3)
        )

    @classmethod
    def parse(cls, text: str) -> "Mat3":
        return parse_matrix(text)


IDENTITY = Mat3._raw((ONE, ZERO, ZERO, ZERO, ONE, ZERO, ZERO, ZERO, ONE))


def mat_mul(a: Mat3, b: Mat3) -> Mat3:
    x, y = a.entries, b.entries
    out = []
    for i in range(0, 9, 3):
        r0, r1, r2 = x[i], x[i + 1], x[i + 2]
        for j in range(3):
            acc = None
            for p, q in ((r0, y[j]), (r1, y[3 + j]), (r2, y[6 + j])):
                if p.coeffs and q.coeffs:
                    term = p * q
                    acc = term if acc is None else acc + term
            out.append(ZERO if acc is None else acc)
    return Mat3._raw(tuple(out))


def det(a: Mat3) -> LaurentPoly:
    """Determinant by cofactor expansion along the first row."""
    m = a.entries
    return (
        m[0] * (m[4] * m[8] - m[5] * m[7])
        - m[1] * (m[3] * m[8] - m[5] * m[6])
        + m[2] * (m[3] * m[7] - m[4] * m[6])
    )


def as_scalar(a: Mat3) -> Optional[LaurentPoly]:
    """Return ``c`` if ``a == c * I``, else ``None``."""
    m = a.entries
    if m[1] or m[2] or m[3] or m[5] or m[6] or m[7]:
        return None
    if m[0] == m[4] == m[8]:
        return m[0]
    return None


class ProjKey(tuple):
    """Row-major entry data of a matrix normalised up to a factor ``+-t**e``.

    Each entry is stored as ``(min_deg, coeffs)``, so equality is exact.
    """

    __slots__ = ()


def canonicalize(a: Mat3, *, monomial_only: bool = False) -> ProjKey:
    """Key identifying ``a`` up to multiplication by a unit monomial ``+-t**e``.

    The first nonzero entry in row-major order is used as pivot: the whole
    matrix is divided by ``sign * t**low`` where ``sign`` is the sign of that
    entry's lowest coefficient and ``low`` its lowest exponent.  With
    ``monomial_only=True`` every nonzero entry must be ``c * t**e``, otherwise
    ``NonMonomialEntry`` is raised.
    """
    entries = a.entries
    if monomial_only:
        for x in entries:
            if x.coeffs and len(x.coeffs) != 1:
                raise NonMonomialEntry(f"entry {x} is not a monomial")
    pivot = next((x for x in entries if x.coeffs), None)
    if pivot is None:
        return ProjKey((0, ()) for _ in entries)
    shift = pivot.min_deg
    if pivot.coeffs[0] < 0:
        return ProjKey(
            (x.min_deg - shift, tuple(-c for c in x.coeffs)) if x.coeffs else (0, ()) for x in entries
        )
    return ProjKey((x.min_deg - shift, x.coeffs) if x.coeffs else (0, ()) for x in entries)


def parse_matrix(text: str) -> Mat3:
    """Parse ``"r00, r01, r02; r10, ...; ..."`` (rows by ``;``, entries by ``,``)."""
    rows = [r for r in text.strip().split(";")]
    if len(rows) != 3:
        raise ValueError(f"expected 3 rows separated by ';', got {len(rows)}")
    parsed = []
    for r in rows:
        cells = r.split(",")
        if len(cells) != 3:
            raise ValueError(f"expected 3 entries separated by ',' in row {r.strip()!r}")
        parsed.append([parse_laurent(c) for c in cells])
    return Mat3(parsed)
