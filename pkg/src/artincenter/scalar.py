"""Exact arithmetic in the cyclotomic field generated by exp(i*pi/N).

Elements are residues of rational polynomials modulo the 2N-th cyclotomic
polynomial, stored as integer coefficient vectors over a common positive
denominator.  This gives a decidable zero test (the reduced polynomial is
zero) and therefore exact equality.  Sign determination of real elements
uses the zero test first, then evaluates sum(c_j * cos(j*pi/N)) with outward
interval arithmetic, doubling the working precision until the enclosure
excludes zero.  Nonzero algebraic numbers are bounded away from zero, so the
ladder terminates; the 4096-bit cap is a loud guard against bugs, not a
domain error.

All values used by the reflection representation are real; realness is a
flag propagated through arithmetic and checked against conjugation (the
substitution x -> x^(2N-1)) only when a value is built from raw coefficients.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from mpmath import iv

_PRECISION_LADDER = (64, 128, 256, 512, 1024, 2048, 4096)


class PrecisionExhaustedError(ArithmeticError):
    """Interval sign determination hit the precision cap; indicates a bug."""


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials; den is monic in our usage.
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % den[-1] != 0:
            raise ArithmeticError("non-exact polynomial division")
        q = c // den[-1]
        out[k] = q
        for t, b in enumerate(den):
            num[k + t] -= q * b
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial.

    Computed by the product recursion: x^n - 1 divided by the product of the
    cyclotomic polynomials of the proper divisors of n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    den = [1]
    for d in _divisors(n)[:-1]:
        phi_d = cyclotomic_polynomial(d)
        out = [0] * (len(den) + len(phi_d) - 1)
        for i, a in enumerate(den):
            if a:
                for j, b in enumerate(phi_d):
                    out[i + j] += a * b
        den = out
    return tuple(_poly_div_exact(num, den))


class FieldContext:
    """Arithmetic context for one field: modulus, reduction tables, enclosure cache."""

    def __init__(self, N: int):
        if N < 1:
            raise ValueError("N must be positive")
        self.N = N
        self.modulus = cyclotomic_polynomial(2 * N)
        self.degree = len(self.modulus) - 1
        d = self.degree
        # x^d reduced mod the (monic) modulus; all higher powers fold through it
        self._fold_base = tuple(-c for c in self.modulus[:d])
        self._power_table: tuple[tuple[int, ...], ...] | None = None
        self._cos_cache: dict[int, list] = {}
        # sign is independent of the (positive) denominator, so it is shared
        # across all scalars with the same numerator vector
        self._sign_cache: dict[tuple[int, ...], int] = {}
        zero_nums = (0,) * d
        self.zero = Scalar(self, zero_nums, 1, real=True)
        one_nums = (1,) + (0,) * (d - 1)
        self.one = Scalar(self, one_nums, 1, real=True)

    def __repr__(self) -> str:
        return f"FieldContext(N={self.N})"

    # -- construction ----------------------------------------------------

    def from_rational(self, q: int | Fraction) -> "Scalar":
        q = Fraction(q)
        nums = (q.numerator,) + (0,) * (self.degree - 1)
        return Scalar(self, *_normalize(nums, q.denominator), real=True)

    def from_coeffs(self, coeffs: Sequence[int | Fraction]) -> "Scalar":
        """Scalar from rational coefficients of powers of the root, any length."""
        den = 1
        for c in coeffs:
            den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
        nums = [int(Fraction(c) * den) for c in coeffs]
        reduced = self.reduce(nums)
        return Scalar(self, *_normalize(reduced, den))

    def root_power(self, k: int) -> "Scalar":
        """The exact value of the generator raised to the k-th power (any integer k)."""
        k %= 2 * self.N
        return Scalar(self, self.power_table()[k], 1)

    # -- reduction machinery ----------------------------------------------

    def reduce(self, nums: Sequence[int]) -> tuple[int, ...]:
        """Reduce an integer coefficient vector of any length modulo the modulus."""
        d = self.degree
        if len(nums) <= d:
            return tuple(nums) + (0,) * (d - len(nums))
        work = list(nums)
        base = self._fold_base
        for k in range(len(work) - 1, d - 1, -1):
            c = work[k]
            if c:
                off = k - d
                for t in range(d):
                    work[off + t] += c * base[t]
        return tuple(work[:d])

    def power_table(self) -> tuple[tuple[int, ...], ...]:
        # x^k mod modulus for k in [0, 2N); used by conjugation.
        if self._power_table is None:
            d = self.degree
            base = self._fold_base
            table = []
            cur = [1] + [0] * (d - 1)
            for _ in range(2 * self.N):
                table.append(tuple(cur))
                top = cur[d - 1]
                cur = [0] + cur[: d - 1]
                if top:
                    cur = [c + top * b for c, b in zip(cur, base)]
            self._power_table = tuple(table)
        return self._power_table

    def cos_enclosures(self, prec: int) -> list:
        """Outward enclosures of cos(j*pi/N) for j < degree, at the given precision."""
        cached = self._cos_cache.get(prec)
        if cached is None:
            old = iv.prec
            try:
                iv.prec = prec
                cached = [iv.cos(iv.pi * j / self.N) for j in range(self.degree)]
            finally:
                iv.prec = old
            self._cos_cache[prec] = cached
        return cached


@lru_cache(maxsize=None)
def _context_for(N: int) -> FieldContext:
    return FieldContext(N)


def field_context(labels: Iterable[int]) -> FieldContext:
    """Context for the smallest field containing cos(pi/m) for every finite label."""
    N = 1
    for m in labels:
        if not (isinstance(m, int) and m >= 2):
            raise ValueError(f"label {m!r} must be an integer >= 2")
        N = N * m // math.gcd(N, m)
    return _context_for(N)


def cos_pi_over(m: int | float, ctx: FieldContext) -> "Scalar":
    """Exact cos(pi/m) for finite m dividing N; the rational 1 for an infinite label.

    The infinite-label value 1 makes -cos equal to -1, the standard Gram entry
    for a non-adjacent pair in the reflection representation.
    """
    if m == math.inf:
        return ctx.one
    if not (isinstance(m, int) and m >= 2):
        raise ValueError(f"label {m!r} must be an integer >= 2 or INF")
    if ctx.N % m != 0:
        raise ValueError(f"label {m} does not divide the context order N={ctx.N}")
    k = ctx.N // m
    val = ctx.root_power(k) + ctx.root_power(2 * ctx.N - k)
    return Scalar(ctx, val.nums, 2 * val.den, real=True)._normalized()


def _normalize(nums: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        nums = [-c for c in nums]
        den = -den
    if den != 1:
        g = den
        for c in nums:
            if c:
                g = math.gcd(g, c)
                if g == 1:
                    break
        if g > 1:
            nums = [c // g for c in nums]
            den //= g
    return tuple(nums), den


class Scalar:
    """Immutable field element: integer coefficients over a positive denominator.

    The coefficient tuple always has length equal to the context degree and is
    reduced modulo the modulus; together with the gcd-normalized denominator
    this representation is canonical, so equality and hashing are structural.
    """

    __slots__ = ("ctx", "nums", "den", "_real", "_sign")

    def __init__(self, ctx: FieldContext, nums: tuple[int, ...], den: int, real=None):
        self.ctx = ctx
        self.nums = nums
        self.den = den
        self._real = real
        self._sign = None

    def _normalized(self) -> "Scalar":
        nums, den = _normalize(self.nums, self.den)
        if nums == self.nums and den == self.den:
            return self
        return Scalar(self.ctx, nums, den, real=self._real)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("scalar is not rational")
        return Fraction(self.nums[0], self.den)

    def conj(self) -> "Scalar":
        """Image under the substitution x -> x^(2N-1), i.e. complex conjugation."""
        table = self.ctx.power_table()
        d = self.ctx.degree
        out = [0] * d
        twoN = 2 * self.ctx.N
        for j, c in enumerate(self.nums):
            if c:
                row = table[(twoN - j) % twoN]
                for t in range(d):
                    out[t] += c * row[t]
        return Scalar(self.ctx, *_normalize(out, self.den))

    @property
    def is_real(self) -> bool:
        if self._real is None:
            self._real = self.conj() == self
        return self._real

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Scalar") -> None:
        if self.ctx.N != other.ctx.N:
            raise ValueError("scalars from different field contexts")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.from_rational(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check(other)
        a, b = self, other
        if not any(a.nums):
            return b
        if not any(b.nums):
            return a
        if a.den == b.den:
            nums = tuple(x + y for x, y in zip(a.nums, b.nums))
            den = a.den
        else:
            g = math.gcd(a.den, b.den)
            da, db = b.den // g, a.den // g
            nums = tuple(x * da + y * db for x, y in zip(a.nums, b.nums))
            den = a.den * da
        real = True if (a._real and b._real) else None
        return Scalar(self.ctx, *_normalize(nums, den), real=real)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.ctx, tuple(-c for c in self.nums), self.den, real=self._real)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Scalar) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            nums = tuple(c * q.numerator for c in self.nums)
            return Scalar(
                self.ctx, *_normalize(nums, self.den * q.denominator), real=self._real
            )
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check(other)
        if not any(self.nums) or not any(other.nums):
            return self.ctx.zero
        if self.is_rational():
            q = Fraction(self.nums[0], self.den)
            return other * q if q != 1 else other
        if other.is_rational():
            q = Fraction(other.nums[0], other.den)
            return self * q if q != 1 else self
        a, b = self.nums, other.nums
        d = self.ctx.degree
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        nums = self.ctx.reduce(conv)
        den = self.den * other.den
        real = True if (self._real and other._real) else None
        if den == 1:
            return Scalar(self.ctx, nums, 1, real=real)
        return Scalar(self.ctx, *_normalize(nums, den), real=real)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.ctx.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "Scalar":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("scalar is zero")
        if self.is_rational():
            q = 1 / self.as_fraction()
            return self.ctx.from_rational(q)
        a = [Fraction(c, self.den) for c in self.nums]
        b = [Fraction(c) for c in self.ctx.modulus]
        s0, s1 = [Fraction(1)], [Fraction(0)]

        def deg(p):
            for i in range(len(p) - 1, -1, -1):
                if p[i]:
                    return i
            return -1

        while deg(b) > 0:
            da, db = deg(a), deg(b)
            if da < db:
                a, b, s0, s1 = b, a, s1, s0
                continue
            shift, factor = da - db, a[da] / b[db]
            for t in range(db + 1):
                a[t + shift] -= factor * b[t]
            if len(s0) < len(s1) + shift + 1:
                s0 = s0 + [Fraction(0)] * (len(s1) + shift + 1 - len(s0))
            for t in range(len(s1)):
                s0[t + shift] -= factor * s1[t]
        if deg(b) != 0:
            raise ArithmeticError("modulus is not coprime to the element")
        g = b[0]
        coeffs = [c / g for c in s1]
        result = self.ctx.from_coeffs(coeffs)
        result._real = self._real
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if not isinstance(other, Scalar):
            return NotImplemented
        return self * other.inverse()

    # -- comparison / hashing ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.as_fraction() == other
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.ctx.N == other.ctx.N and self.nums == other.nums and self.den == other.den

    def __hash__(self):
        return hash((self.ctx.N, self.nums, self.den))

    # -- sign and numeric views ------------------------------------------------

    def sign(self) -> int:
        """Exact sign of a real element: -1, 0 or +1."""
        if self._sign is not None:
            return self._sign
        if self.is_zero():
            self._sign = 0
            return 0
        if self.is_rational():
            self._sign = 1 if self.nums[0] > 0 else -1
            return self._sign
        cached = self.ctx._sign_cache.get(self.nums)
        if cached is not None:
            self._sign = cached
            return cached
        if not self.is_real:
            raise ValueError("sign is defined for real scalars only")
        for prec in _PRECISION_LADDER:
            cosines = self.ctx.cos_enclosures(prec)
            old = iv.prec
            try:
                iv.prec = prec
                total = iv.mpf(0)
                for j, c in enumerate(self.nums):
                    if c:
                        total += c * cosines[j]
            finally:
                iv.prec = old
            if total > 0:
                self._sign = self.ctx._sign_cache[self.nums] = 1
                return 1
            if total < 0:
                self._sign = self.ctx._sign_cache[self.nums] = -1
                return -1
        raise PrecisionExhaustedError(
            f"sign of nonzero scalar undecided at {_PRECISION_LADDER[-1]} bits"
        )

    def __float__(self) -> float:
        if not self.is_real:
            raise ValueError("float value is defined for real scalars only")
        angle = math.pi / self.ctx.N
        total = sum(c * math.cos(j * angle) for j, c in enumerate(self.nums) if c)
        return total / self.den

    def complex_value(self) -> complex:
        angle = math.pi / self.ctx.N
        total = sum(
            c * complex(math.cos(j * angle), math.sin(j * angle))
            for j, c in enumerate(self.nums)
            if c
        )
        return total / self.den

    def __repr__(self) -> str:
        if self.is_rational():
            return f"Scalar({self.as_fraction()})"
        terms = []
        for j, c in enumerate(self.nums):
            if c:
                terms.append(f"{c}*z^{j}" if j else str(c))
        body = " + ".join(terms).replace("+ -", "- ")
        if self.den != 1:
            return f"Scalar(({body})/{self.den}, N={self.ctx.N})"
        return f"Scalar({body}, N={self.ctx.N})"
