"""Words over the Artin generators and their formal inverses.

Words are elements of the free monoid: fully expanded letter sequences with
exponents +1 or -1, no implicit cancellation.  The retraction map consumes
words letter by letter, which is why the expansion is kept literal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graph import DefiningGraph
from . import coxeter

MAX_LETTERS = 10**6

_TOKEN_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


class WordSyntaxError(ValueError):
    """Raised when word text does not parse."""


@dataclass(frozen=True)
class ArtinWord:
    """A sequence of (generator, exponent) letters with exponents +1 or -1."""

    letters: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if len(self.letters) > MAX_LETTERS:
            raise ValueError(f"word exceeds the {MAX_LETTERS}-letter guard")
        for v, e in self.letters:
            if e not in (1, -1):
                raise ValueError(f"letter exponent {e} must be +1 or -1")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "ArtinWord") -> "ArtinWord":
        return ArtinWord(self.letters + other.letters)

    def __pow__(self, k: int) -> "ArtinWord":
        if k < 0:
            return self.inverse() ** (-k)
        return ArtinWord(self.letters * k)

    def inverse(self) -> "ArtinWord":
        return ArtinWord(tuple((v, -e) for v, e in reversed(self.letters)))

    def is_positive(self) -> bool:
        return all(e == 1 for _, e in self.letters)

    def support(self) -> frozenset[str]:
        return frozenset(v for v, _ in self.letters)

    def rotated(self, start: int) -> "ArtinWord":
        """Cyclic permutation beginning at the given letter index."""
        if not 0 <= start <= len(self.letters):
            raise IndexError(f"rotation index {start} out of range")
        return ArtinWord(self.letters[start:] + self.letters[:start])

    def to_text(self) -> str:
        """Serialize, re-compressing runs of one letter into v^k form."""
        parts: list[str] = []
        i = 0
        letters = self.letters
        while i < len(letters):
            v, e = letters[i]
            j = i
            while j < len(letters) and letters[j] == (v, e):
                j += 1
            k = (j - i) * e
            parts.append(v if k == 1 else f"{v}^{k}")
            i = j
        return " ".join(parts)

    def __repr__(self):
        return f"ArtinWord({self.to_text() or '1'})"


def parse_word(text: str, g: DefiningGraph) -> ArtinWord:
    """Parse whitespace-separated tokens ``v``, ``v^k`` or ``v^-k`` over the
    graph's vertices; exponents expand into repeated single letters."""
    letters: list[tuple[str, int]] = []
    for token in text.split():
        match = _TOKEN_RE.match(token)
        if not match:
            raise WordSyntaxError(f"malformed token {token!r}")
        v, exp_text = match.group(1), match.group(2)
        if v not in g:
            raise WordSyntaxError(f"unknown generator {v!r}")
        exp = 1 if exp_text is None else int(exp_text)
        if exp == 0:
            raise WordSyntaxError(f"zero exponent in {token!r}")
        sign = 1 if exp > 0 else -1
        letters.extend([(v, sign)] * abs(exp))
        if len(letters) > MAX_LETTERS:
            raise WordSyntaxError(f"word exceeds the {MAX_LETTERS}-letter guard")
    return ArtinWord(tuple(letters))


def abelianize(g: DefiningGraph, w: ArtinWord) -> dict[str, int]:
    """Exponent sum per generator, indexed by every vertex of the graph."""
    sums = {v: 0 for v in g.vertices}
    for v, e in w.letters:
        if v not in sums:
            raise ValueError(f"unknown generator {v!r}")
        sums[v] += e
    return sums


def is_pure(g: DefiningGraph, w: ArtinWord) -> bool:
    """True iff the word maps to the identity of the Coxeter group."""
    return coxeter.theta(g, w).is_identity()
