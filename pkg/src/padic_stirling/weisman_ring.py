"""Weisman sums S_1, S_2 and the ring F_p[x]/(x^p - 1).

For odd p and e = [(n-1)/(p-1)]:

    S_1(n, r) = p^-e sum_{k == r (p)} (-1)^k C(n, k)
    S_2(n, r) = p^-e sum_{k == pr (p^2)} (-1)^k C(pn, k)

Both divisions are exact (Weisman); we divide exact big integers and treat a
nonzero remainder as a hard error rather than reducing mod p first.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

from .errors import DivisibilityViolation
from .report import Report
from .t_functions import t_mod_p
from .exact_arith import digit_sum_p


def _require_odd(p: int) -> None:
    if p == 2 or p < 2:
        raise ValueError("the Weisman sums are defined here for odd primes only")


def _exact_div(total: int, p: int, e: int, what: str) -> int:
    q, rem = divmod(total, p**e)
    if rem:
        raise DivisibilityViolation(f"{what}: {p}^{e} does not divide {total}")
    return q


@lru_cache(maxsize=4096)
def s1(p: int, n: int, r: int) -> int:
    _require_odd(p)
    if n < 1:
        raise ValueError("n must be >= 1")
    total = sum((-1) ** k * math.comb(n, k) for k in range(r % p, n + 1, p))
    return _exact_div(total, p, (n - 1) // (p - 1), f"S1({n},{r}) at p={p}")


@lru_cache(maxsize=4096)
def s2(p: int, n: int, r: int) -> int:
    _require_odd(p)
    if n < 1:
        raise ValueError("n must be >= 1")
    total = sum((-1) ** k * math.comb(p * n, k) for k in range((p * r) % (p * p), p * n + 1, p * p))
    return _exact_div(total, p, (n - 1) // (p - 1), f"S2({n},{r}) at p={p}")


@dataclass(frozen=True)
class CycPoly:
    """Element of F_p[x]/(x^p - 1); coeffs[i] is the coefficient of x^i."""

    prime: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        p = self.prime
        if len(self.coeffs) != p:
            raise ValueError(f"need exactly {p} coefficients")
        object.__setattr__(self, "coeffs", tuple(c % p for c in self.coeffs))

    @classmethod
    def from_terms(cls, p: int, terms: dict[int, int]) -> "CycPoly":
        c = [0] * p
        for e, v in terms.items():
            c[e % p] += v
        return cls(p, tuple(c))

    @classmethod
    def const(cls, p: int, c: int) -> "CycPoly":
        return cls.from_terms(p, {0: c})

    @classmethod
    def monomial(cls, p: int, e: int, c: int = 1) -> "CycPoly":
        return cls.from_terms(p, {e: c})

    def __getitem__(self, e: int) -> int:
        return self.coeffs[e % self.prime]

    def _lift(self, other) -> "CycPoly":
        if isinstance(other, int):
            return CycPoly.const(self.prime, other)
        if other.prime != self.prime:
            raise ValueError("mixing rings of different primes")
        return other

    def __add__(self, other):
        o = self._lift(other)
        return CycPoly(self.prime, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycPoly(self.prime, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        p = self.prime
        out = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[(i + j) % p] += a * b
        return CycPoly(p, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined in general")
        result = CycPoly.const(self.prime, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def at_one(self) -> int:
        return sum(self.coeffs) % self.prime

    def in_antisymmetric_span(self, t: int) -> bool:
        """Membership in R_t, the span of x^i - x^(t-i): c_i + c_(t-i) == 0 for all i."""
        p = self.prime
        return all((self[i] + self[t - i]) % p == 0 for i in range(p))


def one_minus_x(p: int) -> CycPoly:
    return CycPoly.from_terms(p, {0: 1, 1: -1})


def psi(p: int) -> CycPoly:
    """((1-x)^(p-1) - (1 + x + ... + x^(p-1))) / p, coefficientwise."""
    _require_odd(p)
    alpha = {}
    for i in range(p):
        num = (-1) ** i * math.comb(p - 1, i) - 1
        q, rem = divmod(num, p)
        assert rem == 0
        alpha[i] = q
    return CycPoly.from_terms(p, alpha)


def p_poly(p: int, n: int) -> CycPoly:
    return CycPoly(p, tuple(s1(p, n, r) for r in range(p)))


def q_poly(p: int, n: int) -> CycPoly:
    return CycPoly(p, tuple(s2(p, n, r) for r in range(p)))


def predicted_poly(p: int, n: int) -> CycPoly:
    """psi^m (1-x)^d with n = (p-1)m + d, 1 <= d <= p-1."""
    m = (n - 1) // (p - 1)
    d = n - (p - 1) * m
    return psi(p) ** m * one_minus_x(p) ** d


def s1_closed_form(p: int, n: int, r: int) -> int | None:
    """S_1(n, r) mod p when n = (p-1)s or (p-1)s - 1, else None."""
    if n % (p - 1) == 0:
        s = n // (p - 1)
        return (-1) ** (s - 1) % p
    if (n + 1) % (p - 1) == 0:
        s = (n + 1) // (p - 1)
        half = (s + 1) * pow(2, -1, p)
        return (-1) ** (s - 1) * (half + r) % p
    return None


def verify_mian(p: int, n_max: int, seed: int = 0) -> Report:
    """Congruences between S_1, S_2, psi and (1-x) for n <= n_max."""
    _require_odd(p)
    rep = Report(f"weisman p={p} n<={n_max}")
    a, b, c = rep.check("S1==S2 mod p"), rep.check("S1 closed forms"), rep.check("S1 twist by p(p-1)")
    poly, zero = rep.check("P=psi^m(1-x)^d=Q"), rep.check("odd n, n-2r==0 gives S1=S2=0")
    period = p * (p - 1)
    for n in range(1, n_max + 1):
        P, Q = p_poly(p, n), q_poly(p, n)
        poly.record(P == Q == predicted_poly(p, n), n)
        for r in range(p):
            a.record((s1(p, n, r) - s2(p, n, r)) % p == 0, (n, r))
            want = s1_closed_form(p, n, r)
            if want is not None:
                b.record(s1(p, n, r) % p == want, (n, r))
            if n + period <= n_max:
                c.record((s1(p, n + period, r) + s1(p, n, r)) % p == 0, (n, r))
            if n % 2 == 1 and (n - 2 * r) % p == 0:
                zero.record(s1(p, n, r) == 0 == s2(p, n, r), (n, r))

    ps, u = psi(p), one_minus_x(p)
    ring = rep.check("psi identities")
    ring.record(ps.at_one() == p - 1, "psi(1) = -1")
    ring.record(((ps + 1) * u ** (p - 1)).is_zero(), "(psi+1)(1-x)^(p-1)")
    half = CycPoly.monomial(p, (p - 1) // 2)
    ring.record(((ps + half) * u ** (p - 2)).is_zero(), "(psi+x^((p-1)/2))(1-x)^(p-2)")
    ring.record(ps**p == CycPoly.const(p, -1), "psi^p = -1")

    rng = random.Random(seed)
    span = rep.check("R_t times psi lies in R_(t-1)")
    for _ in range(200):
        t = rng.randrange(p)
        g = CycPoly.const(p, 0)
        for i in range(p):
            coef = rng.randrange(p)
            g = g + CycPoly.monomial(p, i, coef) - CycPoly.monomial(p, t - i, coef)
        assert g.in_antisymmetric_span(t)
        span.record((g * ps).in_antisymmetric_span(t - 1), (t, g.coeffs))
    return rep


def kron_bridge_p2(n_max: int) -> Report:
    """At p = 2: T_{0,2}(2n, 2r) and T_{0,1}(n, r) are both delta(d_2(n), 1) mod 2."""
    rep = Report(f"p=2 bridge n<={n_max}")
    chk = rep.check("T_{0,2}(2n,2r) == T_{0,1}(n,r) == [d_2(n)=1] mod 2")
    for n in range(1, n_max + 1):
        want = 1 if digit_sum_p(n, 2) == 1 else 0
        for r in range(2):
            lhs, rhs = t_mod_p(2, 0, 2, 2 * n, 2 * r), t_mod_p(2, 0, 1, n, r)
            chk.record(lhs == rhs == want, (n, r, lhs, rhs))
    return rep
