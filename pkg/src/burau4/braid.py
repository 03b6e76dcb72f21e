"""Words in the four-strand braid group and an exact equality test.

Letters are signed integers: ``i`` is sigma_i and ``-i`` its inverse,
``i in {1, 2, 3}``.  Two braid words are compared through the Artin action
of B4 on the free group F4 = <x1, x2, x3, x4>; the action is faithful, so
equal images of the four generators means equal braids.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple

__all__ = [
    "BraidWord",
    "FreeWord",
    "WordSyntaxError",
    "SIGMA1",
    "SIGMA2",
    "SIGMA3",
    "ALPHA",
    "BETA",
    "TAU",
    "DELTA",
    "THETA",
    "NAMED",
    "free_reduce",
    "artin_image",
    "compose_images",
    "braid_eq",
    "is_central",
    "parse_braid",
    "parse_tokens",
    "Check",
    "verify_braid_identities",
]

FreeWord = Tuple[int, ...]
"""A freely reduced word in x1..x4, letters are +-1..+-4."""


class WordSyntaxError(ValueError):
    """Bad braid-word text.  ``column`` is 1-based; input is always line 1."""

    def __init__(self, message: str, text: str, column: int):
        self.text = text
        self.line = 1
        self.column = column
        super().__init__(f"line 1, column {column}: {message}")


def _reduce_letters(letters: Iterable[int]) -> Tuple[int, ...]:
    out = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


class BraidWord:
    """An (unreduced) word in sigma_1, sigma_2, sigma_3 and their inverses.

    Equality and hashing are literal on the letter sequence; use
    :func:`braid_eq` for equality in the group.
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        letters = tuple(int(x) for x in letters)
        for x in letters:
            if x == 0 or abs(x) > 3:
                raise ValueError(f"braid letter {x} outside +-1..+-3")
        self.letters = letters

    def __reduce__(self):
        return (BraidWord, (self.letters,))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def __pow__(self, n: int) -> "BraidWord":
        base = self if n >= 0 else self.inverse()
        return BraidWord(base.letters * abs(n))

    def inverse(self) -> "BraidWord":
        return BraidWord(-x for x in reversed(self.letters))

    def reduce(self) -> "BraidWord":
        return BraidWord(_reduce_letters(self.letters))

    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def __eq__(self, other) -> bool:
        if isinstance(other, BraidWord):
            return self.letters == other.letters
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.letters)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def __repr__(self) -> str:
        return f"BraidWord({list(self.letters)})"


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs until none remain."""
    return w.reduce()


SIGMA1 = BraidWord([1])
SIGMA2 = BraidWord([2])
SIGMA3 = BraidWord([3])
ALPHA = BraidWord([1, 2, -3, 1, -2, -1])
BETA = BraidWord([3, -1])
TAU = BraidWord([1, 2, 3])
DELTA = BraidWord([1, 2, 3, 1, 2, 1])
THETA = TAU**4

NAMED = {"a": ALPHA, "b": BETA, "t": TAU, "d": DELTA, "q": THETA}


# -- free group helpers -----------------------------------------------------


def _fmul(u: FreeWord, v: FreeWord) -> FreeWord:
    i = 0
    n = min(len(u), len(v))
    while i < n and u[-1 - i] == -v[i]:
        i += 1
    if i == 0:
        return u + v
    return u[: len(u) - i] + v[i:]


def _finv(u: FreeWord) -> FreeWord:
    return tuple(-x for x in reversed(u))


_GENERATORS: Tuple[FreeWord, ...] = ((1,), (2,), (3,), (4,))


def _apply_letter(images: list, g: int) -> None:
    # precompose with the automorphism of one letter, in place
    i = abs(g) - 1
    xi, xj = images[i], images[i + 1]
    if g > 0:
        # x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
        images[i] = _fmul(_fmul(xi, xj), _finv(xi))
        images[i + 1] = xi
    else:
        # x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
        images[i] = xj
        images[i + 1] = _fmul(_fmul(_finv(xj), xi), xj)


def artin_image(w: BraidWord) -> Tuple[FreeWord, FreeWord, FreeWord, FreeWord]:
    """Images of x1..x4 under the automorphism of ``w``.

    Letters are applied left to right: the automorphism of ``u*v`` is
    ``phi_u o phi_v``, i.e. the image tuple of ``u*v`` is obtained by
    substituting the images of ``u`` into the images of ``v``
    (see :func:`compose_images`).
    """
    images = list(_GENERATORS)
    for g in w.letters:
        _apply_letter(images, g)
    return tuple(images)


def _substitute(word: FreeWord, images) -> FreeWord:
    out: FreeWord = ()
    for x in word:
        out = _fmul(out, images[x - 1] if x > 0 else _finv(images[-x - 1]))
    return out


def compose_images(first, second):
    """Image tuple of ``u*v`` from ``artin_image(u)`` and ``artin_image(v)``."""
    return tuple(_substitute(y, first) for y in second)


def braid_eq(u: BraidWord, v: BraidWord) -> bool:
    """True iff ``u`` and ``v`` are the same element of B4."""
    return artin_image(u) == artin_image(v)


def is_central(w: BraidWord) -> bool:
    """True iff ``w`` commutes with each of sigma_1, sigma_2, sigma_3."""
    return all(braid_eq(w * s, s * w) for s in (SIGMA1, SIGMA2, SIGMA3))


# -- text grammar ------------------------------------------------------------

_TOKEN = re.compile(r"\S+")
_ATOM = re.compile(r"^(?:(?P<num>[+-]?[123])|(?P<name>[abtdq]))(?:\^(?P<exp>[+-]?\d+))?$")


def parse_tokens(text: str, names=None) -> Iterator[Tuple[str, int, int]]:
    """Yield ``(atom, exponent, column)`` for each whitespace-separated token.

    ``atom`` is either a signed generator index as a string (``"-3"``) or a
    name from ``names``.  Raises :class:`WordSyntaxError` with the column of
    the offending token.
    """
    allowed = NAMED if names is None else names
    for m in _TOKEN.finditer(text):
        tok = m.group()
        col = m.start() + 1
        am = _ATOM.match(tok)
        if not am:
            raise WordSyntaxError(f"unrecognised token {tok!r}", text, col)
        if am.group("name") and am.group("name") not in allowed:
            raise WordSyntaxError(f"name {am.group('name')!r} not allowed here", text, col)
        exp = int(am.group("exp")) if am.group("exp") is not None else 1
        yield (am.group("num") or am.group("name"), exp, col)


def parse_braid(text: str) -> BraidWord:
    """Parse the braid grammar, e.g. ``"1 2 -3"`` or ``"b^-1 a b"``.

    Numeric tokens ``1 2 3`` (optionally negated) are generators; ``a, b, t,
    d, q`` stand for alpha, beta, tau, Delta, theta.  Any token may carry an
    integer power ``^k``.
    """
    letters = []
    for atom, exp, _ in parse_tokens(text):
        base = NAMED[atom] if atom in NAMED else BraidWord([int(atom)])
        letters.extend((base**exp).letters)
    return BraidWord(letters)


# -- identity suite ----------------------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    statement: str
    passed: bool

    def __str__(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name:<18} {self.statement}"


def _chain(*texts: str) -> bool:
    words = [parse_braid(x) for x in texts]
    return all(braid_eq(u, v) for u, v in zip(words, words[1:]))


def verify_braid_identities() -> List[Check]:
    """Braid-level identities relating alpha, beta, tau, Delta and theta.

    Every statement is decided by :func:`braid_eq`; word chains check each
    consecutive step of a hand computation.
    """
    rows = [
        ("braid-rel-12", "1 2 1 = 2 1 2", _chain("1 2 1", "2 1 2")),
        ("braid-rel-23", "2 3 2 = 3 2 3", _chain("2 3 2", "3 2 3")),
        ("commute-13", "1 3 = 3 1", _chain("1 3", "3 1")),
    ]
    for i in (1, 2):
        j = i + 1
        rows += [
            (f"mixed-inv-{i}a", f"-{j} -{i} {j} = {i} -{j} -{i}", _chain(f"-{j} -{i} {j}", f"{i} -{j} -{i}")),
            (f"mixed-inv-{i}b", f"{j} -{i} -{j} = -{i} -{j} {i}", _chain(f"{j} -{i} -{j}", f"-{i} -{j} {i}")),
            (f"mixed-pos-{i}a", f"-{j} {i} {j} = {i} {j} -{i}", _chain(f"-{j} {i} {j}", f"{i} {j} -{i}")),
            (f"mixed-pos-{i}b", f"{j} {i} -{j} = -{i} {j} {i}", _chain(f"{j} {i} -{j}", f"-{i} {j} {i}")),
        ]
    rows += [
        ("alpha-conj", "a = t^-1 b t", _chain("a", "t^-1 b t")),
        ("alpha-inv-conj", "a^-1 = t b t^-1", _chain("a^-1", "t b t^-1")),
        ("beta-inv-conj", "b^-1 = t^2 b t^-2", _chain("b^-1", "t^2 b t^-2")),
        (
            "alpha-chain",
            "t^-1 b t = ... = a (hand rewriting, 7 steps)",
            _chain(
                "t^-1 b t", "-3 -2 -1 3 2 3", "-3 -2 -1 2 3 2", "-3 1 -2 -1 3 2",
                "1 -3 -2 3 -1 2", "1 2 -3 -2 -1 2", "1 2 -3 1 -2 -1", "a",
            ),
        ),
        (
            "alpha-inv-chain",
            "t b t^-1 = ... = a^-1 (3 steps)",
            _chain("t b t^-1", "1 2 3 -1 -2 -1", "1 2 -1 3 -2 -1", "a^-1"),
        ),
        (
            "beta-inv-chain",
            "t^2 b t^-2 = ... = b^-1 (7 steps)",
            _chain(
                "t^2 b t^-2", "1 2 3 1 2 3 -1 -2 -1 -3 -2 -1", "1 2 3 1 2 -1 3 -2 -3 -1 -2 -1",
                "1 2 3 -2 1 2 -2 -3 2 -2 -1 -2", "1 2 3 -2 -3 -2", "1 2 3 -3 -2 -3", "1 -3", "b^-1",
            ),
        ),
        ("beta-delta", "b = d^-1 t^2", _chain("b", "d^-1 t^2")),
        ("alpha-delta", "a = t^-1 d^-1 t^3", _chain("a", "t^-1 d^-1 t^3")),
        ("alpha-inv-delta", "a^-1 = t d^-1 t", _chain("a^-1", "t d^-1 t")),
        ("beta-inv-delta", "b^-1 = t^2 d^-1", _chain("b^-1", "t^2 d^-1")),
        (
            "beta-delta-chain",
            "d^-1 t^2 = -1 3 = 3 -1 = b",
            _chain("d^-1 t^2", "-1 -2 -1 -3 -2 -1 1 2 3 1 2 3", "-1 3", "3 -1", "b"),
        ),
        ("tau4-delta2", "t^4 = d^2", _chain("t^4", "d^2")),
        ("delta2-theta", "d^2 = q", _chain("d^2", "q")),
        ("theta-central", "q commutes with 1, 2, 3", is_central(THETA)),
    ]
    return [Check(n, s, bool(ok)) for n, s, ok in rows]
