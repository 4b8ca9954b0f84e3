"""Exact equality and centers in rank-2 Artin groups.

For a finite label m the group is spherical and carries a Garside structure:
every element is uniquely delta^k f_1 ... f_p where delta is the alternating
product of m letters starting with the first generator, each factor f_i is a
proper alternating word (length strictly between 0 and m), and adjacent
factors are left weighted.  Normal forms decide equality completely.  For an
infinite label the group is free of rank 2 and free reduction decides
equality.

Simple elements biject with the elements of the finite dihedral Coxeter
group: an alternating word is determined by its first letter and length.
They are represented here as (first_letter_index, length) pairs with the
identity (None, 0) and the full twist canonicalized to start with the first
generator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .words import ArtinWord

# A simple element: (start, k) with start in {0, 1} indexing the generator
# pair and 1 <= k <= m, or (None, 0) for the identity.  k == m is delta.
Simple = tuple[int | None, int]

_ID: Simple = (None, 0)


def _validate(m, gens, word: ArtinWord | None = None) -> None:
    if not (isinstance(m, int) and m >= 2):
        raise ValueError(f"label {m!r} must be a finite integer >= 2")
    if len(gens) != 2 or gens[0] == gens[1]:
        raise ValueError("need two distinct generators")
    if word is not None and not word.support() <= set(gens):
        raise ValueError(f"word uses letters outside {gens}")


def _end(x: Simple) -> int:
    start, k = x
    return start if k % 2 == 1 else 1 - start


def _left_descents(x: Simple, m: int) -> tuple[int, ...]:
    start, k = x
    if k == 0:
        return ()
    if k == m:
        return (0, 1)
    return (start,)


def _right_descents(x: Simple, m: int) -> tuple[int, ...]:
    _, k = x
    if k == 0:
        return ()
    if k == m:
        return (0, 1)
    return (_end(x),)


def _canon(start: int, k: int, m: int) -> Simple:
    if k == 0:
        return _ID
    if k == m:
        return (0, m)
    return (start, k)


def _lmul(c: int, x: Simple, m: int) -> Simple:
    """Left-multiply a dihedral group element by a generator."""
    start, k = x
    if k == 0:
        return (c, 1)
    if k == m:
        # shorten: result has length m-1 and still ends like delta would
        # after removing c from the front; its first letter is the other one.
        return _canon(1 - c, m - 1, m)
    if c == start:
        return _canon(1 - start, k - 1, m)
    return _canon(c, k + 1, m)


def _rmul(x: Simple, c: int, m: int) -> Simple:
    start, k = x
    if k == 0:
        return (c, 1)
    if k == m:
        new_end = 1 - c
        new_start = new_end if (m - 1) % 2 == 1 else 1 - new_end
        return _canon(new_start, m - 1, m)
    if c == _end(x):
        return _canon(start, k - 1, m)
    return _canon(start, k + 1, m)


def _left_complement(x: Simple, m: int) -> Simple:
    """The simple y with y * x = delta in the monoid."""
    start, k = x
    if k == 0:
        return (0, m)
    if k == m:
        return _ID
    y_end = 1 - start
    y_start = y_end if (m - k) % 2 == 1 else 1 - y_end
    return _canon(y_start, m - k, m)


def _tau(x: Simple, m: int) -> Simple:
    """Conjugation by delta: identity for even m, generator swap for odd m."""
    if m % 2 == 0:
        return x
    start, k = x
    if k == 0 or k == m:
        return x
    return (1 - start, k)


def _renorm_pair(u: Simple, v: Simple, m: int) -> tuple[Simple, Simple]:
    """Make the pair left weighted by moving initial letters of v onto u."""
    while True:
        ru = _right_descents(u, m)
        moved = False
        for c in _left_descents(v, m):
            if c not in ru:
                u = _rmul(u, c, m)
                v = _lmul(c, v, m)
                moved = True
                break
        if not moved:
            return u, v


def _normalize_factors(factors: list[Simple], m: int) -> tuple[int, tuple[Simple, ...]]:
    """Comb a factor list into normal form; returns the delta power shifted out."""
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            u, v = _renorm_pair(factors[i], factors[i + 1], m)
            if (u, v) != (factors[i], factors[i + 1]):
                factors[i], factors[i + 1] = u, v
                changed = True
    lo, hi = 0, len(factors)
    while lo < hi and factors[lo][1] == m:
        lo += 1
    while lo < hi and factors[hi - 1][1] == 0:
        hi -= 1
    return lo, tuple(factors[lo:hi])


@dataclass(frozen=True)
class GarsideNormalForm:
    """delta^delta_power followed by left-weighted proper simple factors."""

    m: int
    gens: tuple[str, str]
    delta_power: int
    factors: tuple[Simple, ...]

    def is_trivial(self) -> bool:
        return self.delta_power == 0 and not self.factors

    def _simple_word(self, x: Simple) -> list[tuple[str, int]]:
        start, k = x
        return [(self.gens[(start + i) % 2], 1) for i in range(k)]

    def to_word(self) -> ArtinWord:
        """A word spelling the element: delta power then the factors."""
        delta = self._simple_word((0, self.m))
        letters: list[tuple[str, int]] = []
        if self.delta_power >= 0:
            letters.extend(delta * self.delta_power)
        else:
            inv = [(v, -1) for v, _ in reversed(delta)]
            letters.extend(inv * (-self.delta_power))
        for f in self.factors:
            letters.extend(self._simple_word(f))
        return ArtinWord(tuple(letters))

    def __repr__(self):
        names = ["".join(self.gens[(s + i) % 2] for i in range(k)) for s, k in self.factors]
        return f"GarsideNormalForm(delta^{self.delta_power}; {' . '.join(names) or '1'})"


def garside_nf(m: int, word: ArtinWord, gens: tuple[str, str] = ("s", "t")) -> GarsideNormalForm:
    """Left greedy normal form of a word in the rank-2 Artin group.

    Inverse letters contribute delta^(-1) times the left complement of the
    letter; accumulated delta powers are pushed to the front through the
    conjugation automorphism before the factor list is combed.
    """
    _validate(m, gens, word)
    idx = {gens[0]: 0, gens[1]: 1}
    factors: list[Simple] = []
    delta_pows: list[int] = []
    for v, e in word.letters:
        if e == 1:
            factors.append((idx[v], 1))
            delta_pows.append(0)
        else:
            factors.append(_left_complement((idx[v], 1), m))
            delta_pows.append(-1)
    power = 0
    for i in range(len(factors) - 1, -1, -1):
        if power % 2 == 1:
            factors[i] = _tau(factors[i], m)
        power += delta_pows[i]
    shift, combed = _normalize_factors(factors, m)
    return GarsideNormalForm(m, tuple(gens), power + shift, combed)


def free_reduce(word: ArtinWord) -> ArtinWord:
    """Cancel adjacent inverse pairs until none remain."""
    stack: list[tuple[str, int]] = []
    for v, e in word.letters:
        if stack and stack[-1] == (v, -e):
            stack.pop()
        else:
            stack.append((v, e))
    return ArtinWord(tuple(stack))


def dihedral_equal(
    m: int | float, a: ArtinWord, b: ArtinWord, gens: tuple[str, str] = ("s", "t")
) -> bool:
    """Exact equality of two words in the rank-2 Artin group with label m."""
    if m == math.inf:
        for w in (a, b):
            if not w.support() <= set(gens):
                raise ValueError(f"word uses letters outside {gens}")
        return free_reduce(a) == free_reduce(b)
    return garside_nf(m, a, gens) == garside_nf(m, b, gens)


def dihedral_center_generator(m: int, gens: tuple[str, str] = ("s", "t")) -> ArtinWord:
    """Generator of the center: (st)^(m/2) = delta for even m, (st)^m = delta^2
    for odd m.  The infinite dihedral Artin group has trivial center."""
    if m == math.inf:
        raise ValueError("the label-infinity rank-2 Artin group has trivial center")
    _validate(m, gens)
    s, t = gens
    reps = m // 2 if m % 2 == 0 else m
    return ArtinWord(((s, 1), (t, 1))) ** reps
