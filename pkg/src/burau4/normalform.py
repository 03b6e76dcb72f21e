"""Normal forms in the subgroup of B4 generated by tau and Delta.

Modulo the centre (generated by theta = tau^4 = Delta^2) this subgroup is
Z4 * Z2, so every element is ``theta^m`` times an alternating product of
syllables ``tau^e`` (e in 1..3) and ``Delta``.  Such products are
:class:`AltWord` values.  Syllables are stored as ints: ``e`` in 1..3 for
``tau^e`` and :data:`DSYL` (= 0) for ``Delta``.

Words in the free generators alpha, beta (Gorin-Lin words) are tuples of
signed ints: ``+-1`` for alpha^{+-1}, ``+-2`` for beta^{+-1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from .braid import ALPHA, BETA, DELTA, TAU, THETA, BraidWord, WordSyntaxError, parse_tokens

__all__ = [
    "DSYL",
    "AltWord",
    "GLWord",
    "NotConjugable",
    "gl_reduce",
    "gl_to_braid",
    "gl_substitute",
    "theorem_shape",
    "conjugate_to_shape",
    "alt_eq_mod_center",
    "expand",
    "expand_syllables",
    "parse_gl",
    "format_gl",
    "format_syllables",
]

DSYL = 0

GLWord = Tuple[int, ...]


class NotConjugable(ValueError):
    """The word is a power of beta, so no conjugate starts with beta^-1 and ends with beta."""


def _check_syllables(syllables: Sequence[int]) -> None:
    prev = None
    for s in syllables:
        if s not in (0, 1, 2, 3):
            raise ValueError(f"syllable {s} is neither Delta (0) nor a tau exponent 1..3")
        if prev is not None and (prev == DSYL) == (s == DSYL):
            raise ValueError(f"syllables {list(syllables)} do not alternate")
        prev = s


@dataclass(frozen=True)
class AltWord:
    """``theta^m`` times an alternating tau-power / Delta syllable sequence."""

    m: int = 0
    syllables: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "syllables", tuple(self.syllables))
        _check_syllables(self.syllables)

    def __str__(self) -> str:
        body = format_syllables(self.syllables)
        if self.m == 0:
            return body or "1"
        head = "q" if self.m == 1 else f"q^{self.m}"
        return f"{head} {body}" if body else head


def format_syllables(syllables: Iterable[int]) -> str:
    """``t^2 d t^3 d t^2`` style rendering (``t`` for exponent 1)."""
    parts = []
    for s in syllables:
        if s == DSYL:
            parts.append("d")
        else:
            parts.append("t" if s == 1 else f"t^{s}")
    return " ".join(parts)


# -- Gorin-Lin words ---------------------------------------------------------

_GL_BRAID = {1: ALPHA, 2: BETA, -1: ALPHA.inverse(), -2: BETA.inverse()}

# alpha, beta and inverses as raw (tau exponent | 'D'/'d' for Delta^+-1) pieces
_GL_PIECES = {
    2: (("D", -1), ("t", 2)),  # beta = Delta^-1 tau^2
    1: (("t", -1), ("D", -1), ("t", 3)),  # alpha = tau^-1 Delta^-1 tau^3
    -1: (("t", 1), ("D", -1), ("t", 1)),  # alpha^-1 = tau Delta^-1 tau
    -2: (("t", 2), ("D", -1)),  # beta^-1 = tau^2 Delta^-1
}


def gl_reduce(w: Iterable[int]) -> GLWord:
    out: list = []
    for x in w:
        if x not in (1, 2, -1, -2):
            raise ValueError(f"Gorin-Lin letter {x} outside +-1 (alpha), +-2 (beta)")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def gl_to_braid(w: Iterable[int]) -> BraidWord:
    """Spell a Gorin-Lin word in sigma letters."""
    letters: list = []
    for x in w:
        letters.extend(_GL_BRAID[x].letters)
    return BraidWord(letters)


class _Builder:
    """Stack-based merge of syllables into canonical alternating form."""

    def __init__(self, trace: Optional[List[str]] = None):
        self.m = 0
        self.stack: List[int] = []
        self.trace = trace

    def _log(self, msg: str) -> None:
        if self.trace is not None:
            self.trace.append(msg)

    def push_tau(self, e: int) -> None:
        if e < 0:
            self._log(f"t^{e} -> q^{e // 4} t^{e % 4}")
        if self.stack and self.stack[-1] != DSYL:
            a = self.stack.pop()
            self._log(f"t^{a} t^{e} -> t^{a + e}")
            e += a
        q, r = divmod(e, 4)
        if q and e >= 4:
            self._log(f"t^{e} -> q^{q} t^{r}")
        self.m += q
        if r:
            self.stack.append(r)

    def push_delta(self, sign: int) -> None:
        if sign < 0:
            self._log("d^-1 -> q^-1 d")
            self.m -= 1
        if self.stack and self.stack[-1] == DSYL:
            self.stack.pop()
            self._log("d d -> q")
            self.m += 1
        else:
            self.stack.append(DSYL)

    def result(self) -> AltWord:
        return AltWord(self.m, tuple(self.stack))


def gl_substitute(w: Iterable[int], trace: Optional[List[str]] = None) -> AltWord:
    """Rewrite a Gorin-Lin word as ``theta^m`` times a canonical alternating word.

    Each letter is replaced by its tau/Delta spelling, then ``Delta^-1`` is
    rewritten as ``theta^-1 Delta``, tau powers are reduced mod 4 with the
    quotient moved into ``m``, and ``Delta Delta`` collapses to ``theta``.
    Passing a list as ``trace`` records every rule application.
    """
    b = _Builder(trace)
    for x in w:
        for kind, e in _GL_PIECES[x]:
            if kind == "t":
                b.push_tau(e)
            else:
                b.push_delta(e)
    return b.result()


def canonical_form(m: int, syllables: Iterable[int]) -> AltWord:
    """Canonical AltWord of ``theta^m`` times arbitrary syllables.

    Unlike :class:`AltWord`, ``syllables`` may repeat kinds and use any tau
    exponent (``Delta`` is still :data:`DSYL`).
    """
    b = _Builder()
    b.m = m
    for s in syllables:
        if s == DSYL:
            b.push_delta(1)
        else:
            b.push_tau(s)
    return b.result()


def theorem_shape(a: AltWord) -> Optional[Tuple[int, Tuple[int, ...]]]:
    """``(m, (i_1, ..., i_k))`` if ``a`` reads ``tau^2 D tau^i1 D ... tau^ik D tau^2``.

    ``k = 0`` (``tau^2 D tau^2``) is accepted.
    """
    s = a.syllables
    if len(s) < 3 or len(s) % 2 == 0 or s[0] != 2 or s[-1] != 2:
        return None
    # alternation is guaranteed, so odd positions are Delta
    return a.m, tuple(s[2:-2:2])


def conjugate_to_shape(w: Iterable[int]) -> GLWord:
    """Conjugate by a power of beta so the word starts with beta^-1 and ends with beta.

    ``w = beta^a u beta^b`` with ``u`` not starting or ending in beta^+-1;
    the result is ``beta^(a+p) u beta^(b-p)`` for the ``p`` of smallest
    absolute value with ``a + p <= -1`` and ``b - p >= 1``.
    """
    w = gl_reduce(w)
    lead = 0
    while lead < len(w) and abs(w[lead]) == 2:
        lead += 1
    if lead == len(w):
        raise NotConjugable(f"{format_gl(w) or 'empty word'} is a power of beta")
    trail = 0
    while abs(w[len(w) - 1 - trail]) == 2:
        trail += 1
    a = sum(1 if x > 0 else -1 for x in w[:lead])
    b = sum(1 if x > 0 else -1 for x in w[len(w) - trail :])
    core = w[lead : len(w) - trail]
    p = min(0, -a - 1, b - 1)
    # p <= 0 always: conjugation only ever moves beta^-1 to the front
    left = a + p
    right = b - p
    return gl_reduce((-2,) * (-left) + core + (2,) * right)


def alt_eq_mod_center(u: AltWord, v: AltWord) -> bool:
    """Equality in G/Z: identical syllable sequences, centre exponents ignored."""
    return u.syllables == v.syllables


def expand_syllables(m: int, syllables: Iterable[int]) -> BraidWord:
    """Braid word ``theta^m`` followed by the syllables spelt in sigma letters.

    No canonicity is required of ``syllables``; negative tau exponents are
    spelt with inverse letters.
    """
    letters = list((THETA**m).letters)
    for s in syllables:
        if s == DSYL:
            letters.extend(DELTA.letters)
        else:
            letters.extend((TAU**s).letters)
    return BraidWord(letters)


def expand(a: AltWord) -> BraidWord:
    return expand_syllables(a.m, a.syllables)


# -- text --------------------------------------------------------------------

_GL_NAMES = {"a": 1, "b": 2}


def parse_gl(text: str) -> GLWord:
    """Parse a Gorin-Lin word such as ``"b^-1 a b"`` (names ``a`` and ``b`` only)."""
    letters: list = []
    for atom, exp, col in parse_tokens(text, names=_GL_NAMES):
        if atom not in _GL_NAMES:
            raise WordSyntaxError(f"expected 'a' or 'b', got {atom!r}", text, col)
        g = _GL_NAMES[atom]
        letters.extend([g if exp > 0 else -g] * abs(exp))
    return tuple(letters)


def format_gl(w: Iterable[int]) -> str:
    names = {1: "a", 2: "b", -1: "a^-1", -2: "b^-1"}
    return " ".join(names[x] for x in w)
