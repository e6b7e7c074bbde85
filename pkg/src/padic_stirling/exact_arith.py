"""Exact integer substrate: valuations, digit expansions, binomials mod p.

Valuations are plain ``int`` values, with ``INFINITY`` (``math.inf``) standing
for the valuation of zero.  ``math.inf`` already compares above every int and
absorbs addition, which is all the ordering the rest of the package needs.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import NotPLocal

INFINITY = math.inf
Valuation = Union[int, float]

#: largest p-adic precision any escalation loop may request
DEFAULT_GUARD = int(os.environ.get("PADIC_STIRLING_GUARD", 10**6))


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def val_p(x: int, p: int) -> Valuation:
    """Exponent of p in x; INFINITY for x == 0."""
    if x == 0:
        return INFINITY
    x = abs(x)
    if p == 2:
        return (x & -x).bit_length() - 1
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


@dataclass(frozen=True)
class DigitVector:
    """Little-endian base-p digits; empty for zero."""

    base: int
    digits: tuple[int, ...]

    @classmethod
    def of(cls, n: int, p: int) -> "DigitVector":
        if n < 0:
            raise ValueError("digit expansions are defined for n >= 0")
        out = []
        while n:
            n, d = divmod(n, p)
            out.append(d)
        return cls(p, tuple(out))

    @property
    def value(self) -> int:
        return sum(d * self.base**i for i, d in enumerate(self.digits))

    def __len__(self) -> int:
        return len(self.digits)

    def __getitem__(self, i: int) -> int:
        # positions past the top digit are zero
        return self.digits[i] if 0 <= i < len(self.digits) else 0


def digits(n: int, p: int) -> DigitVector:
    return DigitVector.of(n, p)


def digit_sum_p(n: int, p: int) -> int:
    """Sum of the base-p digits of n (equals the count of 1's when p == 2)."""
    if p == 2:
        return bin(n).count("1")
    s = 0
    while n:
        n, d = divmod(n, p)
        s += d
    return s


def _legendre_count(n: int, p: int) -> int:
    s, q = 0, n // p
    while q:
        s += q
        q //= p
    return s


def factorial_val(n: int, p: int) -> int:
    """nu_p(n!) via the digit-sum formula, cross-checked against floor sums."""
    if n < 0:
        raise ValueError("n must be >= 0")
    by_digits, r = divmod(n - digit_sum_p(n, p), p - 1)
    assert r == 0
    assert by_digits == _legendre_count(n, p), (n, p)
    return by_digits


def gen_binom(m: int, b: int) -> int:
    """Polynomial binomial m(m-1)...(m-b+1)/b!; zero for b < 0."""
    if b < 0:
        return 0
    if m >= 0:
        return math.comb(m, b)
    c = math.comb(b - m - 1, b)
    return -c if b & 1 else c


def binom_mod_p(m: int, b: int, p: int) -> int:
    """C(m, b) mod p by Lucas, with negative m folded in by the sign rule."""
    if b < 0:
        return 0
    sign = 1
    if m < 0:
        m = b - m - 1
        if b & 1:
            sign = -1
    if b > m:
        return 0
    if p == 2:
        return 1 if (b & m) == b else 0
    prod = 1
    while b:
        m, mi = divmod(m, p)
        b, bi = divmod(b, p)
        if bi > mi:
            return 0
        prod = prod * math.comb(mi, bi) % p
    return sign * prod % p


def binom_val(m: int, b: int, p: int) -> int:
    """nu_p(C(m, b)) for 0 <= b <= m (Kummer/Legendre digit form)."""
    if not 0 <= b <= m:
        raise ValueError(f"binom_val needs 0 <= b <= m, got m={m}, b={b}")
    num = digit_sum_p(b, p) + digit_sum_p(m - b, p) - digit_sum_p(m, p)
    v, r = divmod(num, p - 1)
    assert r == 0
    assert v == factorial_val(m, p) - factorial_val(b, p) - factorial_val(m - b, p)
    return v


def mod_inverse(a: int, m: int) -> int:
    return pow(a, -1, m)


def unit_group_exponent(p: int, prec: int) -> int:
    """Exponent of (Z/p^prec)^*: units satisfy u^lam == 1 mod p^prec."""
    if p == 2:
        return 1 << max(prec - 2, 0) if prec >= 3 else (1 if prec <= 1 else 2)
    return (p - 1) * p ** (prec - 1)


@dataclass(frozen=True, eq=False)
class PLocalRational:
    """A rational with denominator prime to p, kept in lowest terms."""

    numerator: int
    denominator: int
    prime: int

    def __post_init__(self):
        if self.denominator == 0:
            raise ZeroDivisionError("zero denominator")
        g = math.gcd(self.numerator, self.denominator)
        num, den = self.numerator // g, self.denominator // g
        if den < 0:
            num, den = -num, -den
        if den % self.prime == 0:
            raise NotPLocal(f"{num}/{den} is not {self.prime}-local")
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def from_fraction(cls, x: Fraction | int, p: int) -> "PLocalRational":
        x = Fraction(x)
        return cls(x.numerator, x.denominator, p)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def mod_p(self) -> int:
        p = self.prime
        return self.numerator * pow(self.denominator, -1, p) % p

    def mod_pk(self, k: int) -> int:
        q = self.prime**k
        return self.numerator * pow(self.denominator, -1, q) % q

    def valuation(self) -> Valuation:
        return val_p(self.numerator, self.prime)

    def _coerce(self, other) -> "PLocalRational":
        if isinstance(other, PLocalRational):
            if other.prime != self.prime:
                raise ValueError("mixing different primes")
            return other
        if isinstance(other, (int, Fraction)):
            return PLocalRational.from_fraction(other, self.prime)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PLocalRational.from_fraction(self.as_fraction() + o.as_fraction(), self.prime)

    __radd__ = __add__

    def __neg__(self):
        return PLocalRational(-self.numerator, self.denominator, self.prime)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PLocalRational.from_fraction(self.as_fraction() * o.as_fraction(), self.prime)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, PLocalRational):
            return self.as_fraction() == other.as_fraction() and self.prime == other.prime
        if isinstance(other, (int, Fraction)):
            return self.as_fraction() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.numerator, self.denominator, self.prime))

    def __repr__(self):
        if self.denominator == 1:
            return f"PLocalRational({self.numerator}, p={self.prime})"
        return f"PLocalRational({self.numerator}/{self.denominator}, p={self.prime})"
