"""The normalized alternating binomial sums T^p_{k,alpha}(n, r).

    T^p_{k,alpha}(n, r) = k! p^k / [n/p^(alpha-1)]!
                          * sum_i (-1)^(p^alpha i + r) C(n, p^alpha i + r) C(i, k)

The i-sum runs over every integer i with 0 <= p^alpha i + r <= n, so i can be
negative when r >= p^alpha; there C(i, k) is the polynomial binomial.  The
values are p-integral rationals, and the closed forms below give them mod p.

Binomials inside the closed-form tables are read combinatorially (zero when
the top is negative).  That is what makes the mod 3 table valid for k >= n
as well; under the polynomial reading it fails exactly there.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .exact_arith import PLocalRational, binom_mod_p, digit_sum_p, gen_binom


@lru_cache(maxsize=1 << 16)
def _t_exact_cached(p: int, k: int, alpha: int, n: int, r: int) -> PLocalRational:
    step = p**alpha
    total = 0
    # smallest i with step*i + r >= 0
    i = -(r // step)
    while step * i + r <= n:
        m = step * i + r
        c = math.comb(n, m) * gen_binom(i, k)
        total += -c if m & 1 else c
        i += 1
    num = math.factorial(k) * p**k * total
    den = math.factorial(n // p ** (alpha - 1))
    return PLocalRational(num, den, p)


def t_exact(p: int, k: int, alpha: int, n: int, r: int) -> PLocalRational:
    """Exact value of T^p_{k,alpha}(n, r); raises NotPLocal if it is not p-integral."""
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    if k < 0 or n < 0:
        raise ValueError("k and n must be >= 0")
    return _t_exact_cached(p, k, alpha, n, r)


def t_mod_p(p: int, k: int, alpha: int, n: int, r: int) -> int:
    return t_exact(p, k, alpha, n, r).mod_p()


def cbinom(m: int, b: int) -> int:
    """Combinatorial binomial: zero unless 0 <= b <= m."""
    if b < 0 or m < 0 or b > m:
        return 0
    return math.comb(m, b)


def t2_closed_mod2(k: int, n: int) -> int:
    """T_{k,2}(n, 2) mod 2."""
    if 4 * k + 2 > n:
        return 0
    return binom_mod_p(n // 2 - k - 1, n // 4, 2)


def t1_closed_mod2(k: int, n: int, r: int) -> int:
    """T_{k,1}(n, r) mod 2: C(n-k-1, [(n-1+rbar)/2]) for n > k, else 0."""
    if n <= k:
        return 0
    return binom_mod_p(n - k - 1, (n - 1 + r % 2) // 2, 2)


def t01_mod3(n: int, r: int) -> int:
    """T_{0,1}(n, r) mod 3 from the 3-power shape of n (n >= 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return (r + 1) % 3
    ds = digit_sum_p(n, 3)
    if ds == 2:
        # 2*3^e or 3^e1 + 3^e2
        return 2 if _is_twice_power(n) else 1
    if ds == 1:
        return r % 3
    return 0


def _is_twice_power(n: int) -> bool:
    while n % 3 == 0:
        n //= 3
    return n == 2


def t1_closed_mod3(k: int, n: int, r: int) -> int:
    """T_{k,1}(n, r) mod 3 from the two parity tables keyed by (r mod 3, n mod 3)."""
    m, d = divmod(n, 3)
    rr = r % 3
    if (n - k) % 2 == 0:
        l = (n - k) // 2
        if rr == 0:
            v = (cbinom(l - 1, m - 1), cbinom(l - 1, m), -cbinom(l - 1, m))[d]
        else:
            v = (-cbinom(l - 1, m), cbinom(l - 1, m), -cbinom(l - 1, m))[d]
    else:
        l = (n - k - 1) // 2
        b = cbinom(l, m)
        v = ((0, b, 0), (b, -b, 0), (-b, 0, 0))[rr][d]
    return v % 3


def t_reduce(p: int, k: int, alpha: int, n: int, r: int) -> int:
    """(-1)^rbar C(nbar, rbar) T^p_{k,alpha}([n/p], [r/p]) mod p, i.e. T^p_{k,alpha+1}(n, r)."""
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    nbar, rbar = n % p, r % p
    factor = binom_mod_p(nbar, rbar, p)
    if rbar & 1:
        factor = -factor
    return factor * t_mod_p(p, k, alpha, n // p, r // p) % p


def recurrence_holds(p: int, k: int, n: int, r: int) -> bool:
    """T_{k,1}(n,r) + r T_{k-1,1}(n,r+p) == -T_{k-1,1}(n-1,r+p-1), exactly (p = 2 or 3)."""
    lhs = t_exact(p, k, 1, n, r) + r * t_exact(p, k - 1, 1, n, r + p)
    rhs = -t_exact(p, k - 1, 1, n - 1, r + p - 1)
    return lhs == rhs


def eps_quarter(n: int, r: int) -> int:
    """The sign in sum_{i == r (4)} C(n, i) = 2^(n-2) + eps * 2^([n/2]-1)."""
    if (n - 2 * r) % 4 == 2:
        return 0
    return 1 if (n - 2 * r) % 8 in (7, 0, 1) else -1


def quarter_sum_holds(n: int, r: int) -> bool:
    # both sides scaled by 4 so that n = 2, 3 stay integral
    lhs = 4 * sum(math.comb(n, i) for i in range(r % 4, n + 1, 4))
    rhs = 2**n + eps_quarter(n, r) * 2 ** (n // 2 + 1)
    return lhs == rhs


def t_cache_info():
    return _t_exact_cached.cache_info()
