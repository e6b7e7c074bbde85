"""The sets of n where e_p(n-1, n) meets its lower bound s_p(n), for p = 2 and 3.

Each membership test evaluates two independent descriptions (an arithmetic
one and a digit-pattern one) and raises CharacterizationMismatch if they
ever disagree.  The mod 3 detectors tau and phi, sparse integers, and
special pairs live here too.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CharacterizationMismatch
from .exact_arith import binom_mod_p, digits, val_p
from .report import Report
from .t_functions import cbinom, t_mod_p


def _binary_no_adjacent_ones(s: int) -> bool:
    return s & (s >> 1) == 0


def _p2_formula(n: int) -> bool:
    eps = val_p(n, 2)
    if eps > 2:
        return False
    s = (n >> eps) // 2
    # C(3s, s) odd  <=>  s and 2s share no bits (Kummer: no carries in s + 2s)
    return binom_mod_p(3 * s, s, 2) == 1


def _p2_bits(n: int) -> bool:
    if n % 8 == 0:
        return False
    m = n >> val_p(n, 2)
    # a pair of 1's is allowed only at the very end of binary(m)
    return _binary_no_adjacent_ones(m >> 1)


def thm2_member(n: int) -> bool:
    """True iff e_2(n-1, n) = s_2(n) by the p = 2 characterization."""
    if n < 1:
        raise ValueError("n must be >= 1")
    a, b = _p2_formula(n), _p2_bits(n)
    if a != b:
        raise CharacterizationMismatch(f"p=2 forms disagree at n={n}: {a} vs {b}")
    # the two descriptions of "C(3s,s) odd" must also agree
    s = (n >> val_p(n, 2)) // 2
    if (binom_mod_p(3 * s, s, 2) == 1) != _binary_no_adjacent_ones(s):
        raise CharacterizationMismatch(f"C(3s,s) parity vs bits at s={s}")
    return a


def t_set_member(n: int) -> bool:
    """Adjacent base-3 digits always sum to less than 3 (0 counts as a member)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    d = digits(n, 3).digits
    return all(a + b < 3 for a, b in zip(d, d[1:]))


def t_prime_member(n: int) -> bool:
    return t_set_member(n) and n % 3 != 2


def _p3_union(n: int) -> bool:
    q, r = divmod(n, 3)
    if r == 1:
        return t_set_member(q)
    if r == 2:
        return t_prime_member(q)
    return n % 9 == 3 and t_set_member(n // 9)


def _p3_digits(n: int) -> bool:
    if n % 9 in (0, 6):
        return False
    d = digits(n, 3).digits[::-1]  # most significant first
    bad = [i for i in range(len(d) - 1) if d[i] + d[i + 1] >= 3]
    if not bad:
        return True
    if len(bad) > 1:
        return False
    i, L = bad[0], len(d)
    if i == L - 2 and (d[i], d[i + 1]) in ((2, 1), (1, 2)):
        return True
    return i == L - 3 and tuple(d[i:]) == (2, 1, 0)


def thm3_member(n: int) -> bool:
    """True iff e_3(n-1, n) = s_3(n) by the p = 3 characterization."""
    if n < 1:
        raise ValueError("n must be >= 1")
    a, b = _p3_union(n), _p3_digits(n)
    if a != b:
        raise CharacterizationMismatch(f"p=3 forms disagree at n={n}: {a} vs {b}")
    return a


# --------------------------------------------------------------------------
# sparse integers and special pairs
# --------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class SpecialPair:
    x: int
    i: int

    def __post_init__(self):
        if not sparse(self.x) or self.i != self.x - _top_power3(self.x):
            raise ValueError(f"({self.x}, {self.i}) is not special")


def sparse(x: int) -> bool:
    """No base-3 digit 2 and no two adjacent 1's."""
    d = digits(x, 3).digits
    return 2 not in d and all(a + b < 2 for a, b in zip(d, d[1:]))


def _top_power3(x: int) -> int:
    q = 1
    while q * 3 <= x:
        q *= 3
    return q


def is_special(x: int, i: int) -> bool:
    return x >= 1 and sparse(x) and i == x - _top_power3(x)


def special_pairs_up_to(bound: int) -> list[SpecialPair]:
    """Special pairs with x <= bound, generated from (1, 0) by F1 and F2.

    F1(x, i) = (3x, 3i) and F2(x, i) = (9x+1, 9i+1); the result is checked
    against a direct scan of sparse x.
    """
    found: set[tuple[int, int]] = set()
    frontier = [(1, 0)] if bound >= 1 else []
    while frontier:
        x, i = frontier.pop()
        if (x, i) in found:
            continue
        found.add((x, i))
        for nx, ni in ((3 * x, 3 * i), (9 * x + 1, 9 * i + 1)):
            if nx <= bound:
                frontier.append((nx, ni))
    direct = {(x, x - _top_power3(x)) for x in range(1, bound + 1) if sparse(x)}
    if found != direct:
        raise CharacterizationMismatch(
            f"special pairs: closure and filter differ by {sorted(found ^ direct)[:5]}"
        )
    return [SpecialPair(x, i) for x, i in sorted(found)]


# --------------------------------------------------------------------------
# tau, phi
# --------------------------------------------------------------------------


def tau_definition(n: int, k: int, eps: int) -> int:
    return (t_mod_p(3, k, 1, n, 1) + eps * t_mod_p(3, k, 1, n, 2)) % 3


def tau(n: int, k: int, eps: int) -> int:
    """T_{k,1}(n,1) + eps T_{k,1}(n,2) mod 3, in closed form."""
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    m, delta = divmod(n, 3)
    if (n - k) % 2 == 0:
        if eps == -1:
            return 0
        l = (n - k) // 2
        return (-1) ** delta * cbinom(l - 1, m) % 3
    l = (n - k - 1) // 2
    if delta == 2 or (eps == 1 and delta == 0):
        return 0
    return -cbinom(l, m) % 3


def _phi_sum(n: int, big: int) -> int:
    total = 0
    for k in range(n):
        c = binom_mod_p(n - 1, k, 3)
        if c:
            total += c * tau(big // 3, k, (-1) ** (n - k - 1))
    return total % 3


def phi(n: int) -> int:
    """sum_k C(n-1, k) tau([n/3], k, (-1)^(n-k-1)) mod 3."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _phi_sum(n, n)


def phi_gen(n: int, N: int) -> tuple[bool, int]:
    """([N/9] == [n/9], sum_k C(n-1, k) tau([N/3], k, (-1)^(n-k-1)) mod 3)."""
    if N < n:
        raise ValueError("need N >= n")
    return N // 9 == n // 9, _phi_sum(n, N)


def phi_gen_criterion(n: int, N: int) -> bool:
    same_block, value = phi_gen(n, N)
    return same_block and value != 0


def tech_lemma_check(bound: int) -> Report:
    """Three mod 3 binomial product identities keyed to special pairs, 1 <= x <= bound."""
    rep = Report(f"special-pair binomial products x<={bound}")
    even, odd1, odd3 = (rep.check(f"clause {c}") for c in (1, 2, 3))

    def prod(x, i, top2):
        if top2 % 2:
            raise AssertionError("numerator must be even")
        return binom_mod_p(x, i, 3) * binom_mod_p_comb(top2 // 2, x) % 3

    for x in range(1, bound + 1):
        for i in range(x + 1):
            if (x - i) % 2 == 0:
                even.record(prod(x, i, 3 * x - 9 * i) == 0, (x, i))
            else:
                sp = is_special(x, i)
                odd1.record(prod(x, i, 3 * x - 9 * i - 1) == int(sp), (x, i))
                odd3.record(prod(x, i, 3 * x - 9 * i - 3) == int(sp and x % 3 == 0), (x, i))
    return rep


def binom_mod_p_comb(m: int, b: int, p: int = 3) -> int:
    """C(m, b) mod p with the combinatorial convention (zero for m < 0)."""
    if m < 0:
        return 0
    return binom_mod_p(m, b, p)
