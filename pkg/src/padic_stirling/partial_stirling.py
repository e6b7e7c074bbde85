"""Partial Stirling numbers and the valuation functions built on them.

``a_p(k, j) = sum_{p !| i} (-1)^i C(j, i) i^k`` is the p-unit part of the
surjection count ``(-1)^j S(k, j) j!``.  Its p-adic valuation is periodic in k:
on the class ``k + (p-1) p^t Z`` it is constant once t reaches the valuation.

Two facts keep every computation finite:

* ``nu_p(a_p(k, j)) >= nu_p(j!)`` for every integer k.  (Lift k inside its
  class to some huge k'; then ``a_p(k', j)`` agrees with ``+-S(k', j) j!`` to
  high p-adic precision, and ``S(k', j) j!`` is a multiple of ``j!``.)  So the
  minimum defining ``e_p(k, n)`` only needs the j with ``nu_p(j!)`` below the
  running minimum.
* Along a class ``k + P x`` (``P = (p-1) p^t``, ``x`` in ``Z_p``) the Mahler
  expansion ``a_p(k + P x, j) = sum_m C(x, m) D_m(j)`` has
  ``D_m(j) = sum (-1)^i C(j, i) i^k (i^P - 1)^m`` with ``nu(D_m) >= m g``, where
  ``g = nu(i^P - 1)`` is at least t+1 (t+2 for p == 2, t >= 1).  Bounding the
  finitely many ``D_m`` that can matter settles the whole class at once.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass, field

from . import kernels
from .errors import DepthCapExceeded, GuardExceeded
from .exact_arith import DEFAULT_GUARD, INFINITY, Valuation, factorial_val, val_p

#: default congruence-class depth cap for the ebar search
DEFAULT_DEPTH_CAP = 30

#: a_p_val falls back to exact integers for 0 <= k up to this
EXACT_K_LIMIT = 2048


def stirling2_times_fact(k: int, j: int) -> int:
    """S(k, j) j!, the number of surjections from a k-set onto a j-set."""
    if k < 0 or j < 0:
        raise ValueError("k and j must be >= 0")
    total = 0
    for i in range(j + 1):
        term = math.comb(j, i) * (i**k if (i or k) else 1)
        total += -term if i & 1 else term
    return -total if j & 1 else total


def surjection_counts(k: int, j_lo: int, j_hi: int) -> list[int]:
    """[S(k, j) j! for j_lo <= j < j_hi], sharing the powers i^k across j."""
    powers = [i**k if (i or k) else 1 for i in range(j_hi)]
    out = []
    row = [1]
    for j in range(j_hi):
        if j:
            row = [1, *map(operator.add, row, row[1:]), 1]
        if j >= j_lo:
            total = sum(c * w if i % 2 == 0 else -c * w for i, (c, w) in enumerate(zip(row, powers)))
            out.append(-total if j & 1 else total)
    return out


def a_p_exact(k: int, j: int, p: int) -> int:
    """Exact partial Stirling number a_p(k, j) for k >= 0."""
    if k < 0:
        raise ValueError("exact a_p needs k >= 0; use a_p_val for negative k")
    total = 0
    for i in range(1, j + 1):
        if i % p == 0:
            continue
        term = math.comb(j, i) * i**k
        total += -term if i & 1 else term
    return total


def a_valuations(k: int, p: int, j_lo: int, j_hi: int, prec: int) -> list[int]:
    """nu_p(a_p(k, j)) for j in [j_lo, j_hi), each capped at ``prec``."""
    _, word = kernels.word_modulus(p)
    if prec <= word:
        vals = kernels.moment_valuations(p, k, 0, 0, j_lo, j_hi)[0]
        return [min(int(v), prec) for v in vals]
    return kernels.moment_valuations_bigint(p, k, 0, 0, j_lo, j_hi, prec)[0]


def _next_precision(prec: int, guard: int) -> int:
    # the cost grows with the square of the j-range, which is linear in the
    # precision, so overshooting is expensive; still geometric, so the
    # number of rounds stays logarithmic
    return min(prec + max(16, prec // 4), guard)


def a_p_val(k: int, j: int, p: int, hint: int = 0, guard: int = DEFAULT_GUARD) -> Valuation:
    """nu_p(a_p(k, j)) for any integer k, by escalating p-adic precision.

    Works modulo p^M and raises M until a nonzero residue certifies the
    valuation; negative k are handled through the unit-group exponent (the
    same as lifting k by a multiple of (p-1)p^t).  Small k >= 0 that survive
    word precision are settled exactly, so a true zero (a_3(1, 2) = 0, say)
    comes back as INFINITY instead of running into the guard.
    """
    if j < 1:
        raise ValueError("a_p_val needs j >= 1")
    _, word = kernels.word_modulus(p)
    prec = max(word, hint + 1)
    while True:
        (v,) = a_valuations(k, p, j, j + 1, prec)
        if v < prec:
            return v
        if 0 <= k <= EXACT_K_LIMIT:
            return val_p(a_p_exact(k, j, p), p)
        if prec >= guard:
            raise GuardExceeded(f"nu_{p}(a_{p}({k},{j}))", guard)
        prec = _next_precision(prec, guard)


def _first_j_with_factorial_val(n: int, p: int, bound: Valuation) -> int:
    """Smallest j >= n with nu_p(j!) >= bound."""
    j = n
    fv = factorial_val(j, p)
    while fv < bound:
        j += 1
        fv += val_p(j, p)
    return j


def e_p_detail(
    k: int, n: int, p: int, hint: int | None = None, guard: int = DEFAULT_GUARD
) -> tuple[int, int]:
    """(e_p(k, n), smallest j >= n attaining it)."""
    if n < 1:
        raise ValueError("e_p needs n >= 1")
    _, word = kernels.word_modulus(p)
    prec = word if hint is None else max(word, hint + 1)
    while True:
        # j beyond j_end have nu_p(a_p(k, j)) >= nu_p(j!) >= prec
        j_end = _first_j_with_factorial_val(n, p, prec)
        vals = a_valuations(k, p, n, j_end, prec) if j_end > n else []
        if vals:
            best = min(vals)
            if best < prec:
                return best, n + vals.index(best)
        if prec >= guard:
            raise GuardExceeded(f"e_{p}({k},{n})", guard)
        prec = _next_precision(prec, guard)


def e_p(k: int, n: int, p: int, hint: int | None = None, guard: int = DEFAULT_GUARD) -> int:
    """e_p(k, n) = min over j >= n of nu_p(a_p(k, j))."""
    return e_p_detail(k, n, p, hint, guard)[0]


def e_p_via_lift(k: int, n: int, p: int, level: int) -> int:
    """e_p(k, n) evaluated at the lift k + (p-1)p^level (equal when level >= result)."""
    return e_p(k + (p - 1) * p**level, n, p)


def tilde_e_p(k: int, n: int, p: int, check: bool = True) -> int:
    """min over j >= n of nu_p(S(k, j) j!), from exact surjection counts (k >= n)."""
    if k < n:
        raise ValueError("tilde_e_p needs k >= n")
    # S(k, j) = 0 for j > k
    value = min(val_p(c, p) for c in surjection_counts(k, n, k + 1))
    if check:
        other = e_p(k, n, p)
        assert other == value, (k, n, p, value, other)
    return value


def s_p(n: int, p: int) -> int:
    """Lower bound n - 1 + nu_p([n/p]!) for e_p(n-1, n)."""
    if n < 1:
        raise ValueError("s_p needs n >= 1")
    return n - 1 + factorial_val(n // p, p)


# --------------------------------------------------------------------------
# congruence-class search for ebar_p(n) = max_k e_p(k, n)
# --------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class CongruenceClass:
    """{k : k == residue mod (p-1) p^level}."""

    residue: int
    level: int
    prime: int

    def __post_init__(self):
        if not 0 <= self.residue < self.modulus:
            raise ValueError(f"residue {self.residue} outside [0, {self.modulus})")

    @property
    def modulus(self) -> int:
        return (self.prime - 1) * self.prime**self.level

    @property
    def representative(self) -> int:
        """Smallest positive member."""
        return self.residue if self.residue > 0 else self.modulus

    def __contains__(self, k: int) -> bool:
        return (k - self.residue) % self.modulus == 0

    def children(self) -> list["CongruenceClass"]:
        m = self.modulus
        kids = [
            CongruenceClass(self.residue + i * m, self.level + 1, self.prime)
            for i in range(self.prime)
        ]
        return sorted(kids, key=lambda c: c.representative)

    def __str__(self):
        return f"{self.residue} mod {self.modulus}"


@dataclass
class EBarResult:
    n: int
    p: int
    ebar: int
    k_max: int
    trace: list[tuple[CongruenceClass, int]] = field(default_factory=list, repr=False)
    max_level: int = 0

    @property
    def classes_examined(self) -> int:
        return len(self.trace)


def _mahler_gain(p: int, level: int) -> int:
    """Lower bound on nu_p(i^P - 1) over units i, P = (p-1) p^level."""
    if p == 2 and level >= 1:
        return level + 2
    return level + 1


@dataclass
class _ClassVerdict:
    value: int  # e_p at the representative
    closed: bool  # e_p constant on the class
    upper: Valuation  # bound on e_p over the class


def examine_class(cls: CongruenceClass, n: int, best: int = -1) -> _ClassVerdict:
    """Decide whether e_p(., n) is constant on ``cls`` and bound it from above."""
    p = cls.prime
    rep = cls.representative
    v, _ = e_p_detail(rep, n, p)
    g = _mahler_gain(p, cls.level)
    target = max(v, best)
    m_max = target // g
    # for j past j_end, every member has nu >= nu(j!) > v
    j_end = _first_j_with_factorial_val(n, p, v + 1)
    prec = target + 2
    _, word = kernels.word_modulus(p)
    if prec <= word:
        prec = word
        vals = kernels.moment_valuations(p, rep, cls.modulus, m_max, n, j_end).tolist()
    else:
        vals = kernels.moment_valuations_bigint(p, rep, cls.modulus, m_max, n, j_end, prec)

    m_close = v // g
    closed = all(vals[m][c] > v for m in range(1, m_close + 1) for c in range(j_end - n))
    upper: Valuation = INFINITY
    tail = (m_max + 1) * g
    for c in range(j_end - n):
        u = vals[0][c]
        if u >= prec:
            continue
        rest = min([vals[m][c] for m in range(1, m_max + 1)] + [tail])
        if u < rest:
            upper = min(upper, u)
    if closed:
        upper = v
    return _ClassVerdict(v, closed, upper)


def _cannot_improve(upper: Valuation, rep: int, best: int, k_max) -> bool:
    # members are all >= rep, so a tie only matters when rep < k_max
    return upper < best or (upper == best and rep > k_max)


def e_bar_p(
    n: int,
    p: int = 2,
    depth_cap: int = DEFAULT_DEPTH_CAP,
    root: CongruenceClass | None = None,
) -> EBarResult:
    """max_k e_p(k, n) and the smallest positive k attaining it.

    Branch and bound over congruence classes: a class is closed when e_p is
    provably constant on it, pruned when its upper bound cannot beat (or tie
    with a smaller k than) the best closed class, and refined into its p
    children otherwise.  Classes still open at ``depth_cap`` raise
    :class:`DepthCapExceeded` carrying the best value found so far.
    """
    if n < 1:
        raise ValueError("e_bar_p needs n >= 1")
    if root is None:
        roots = [CongruenceClass(c, 0, p) for c in range(p - 1)]
    else:
        roots = [root]
    stack = sorted(roots, key=lambda c: c.representative, reverse=True)
    best, k_max = -1, None
    trace: list[tuple[CongruenceClass, int]] = []
    open_at_cap: list[tuple[CongruenceClass, Valuation]] = []
    max_level = 0
    while stack:
        cls = stack.pop()
        max_level = max(max_level, cls.level)
        verdict = examine_class(cls, n, best)
        trace.append((cls, verdict.value))
        rep = cls.representative
        # e_p(rep, n) is exact, so rep is a witness whether or not the class closes
        if verdict.value > best or (verdict.value == best and rep < k_max):
            best, k_max = verdict.value, rep
        if verdict.closed:
            continue
        if _cannot_improve(verdict.upper, rep, best, k_max):
            continue
        if cls.level >= depth_cap:
            open_at_cap.append((cls, verdict.upper))
            continue
        stack.extend(reversed(cls.children()))
    still_open = [c for c, ub in open_at_cap if not _cannot_improve(ub, c.representative, best, k_max)]
    if still_open:
        raise DepthCapExceeded(n, p, best, k_max, still_open)
    return EBarResult(n, p, best, k_max, trace, max_level)


def factored_offset(k: int, base: int, p: int = 2) -> str:
    """Render k as ``base+p^e*odd`` (``base+2^16*5``), or just ``base`` when k == base."""
    if k == base:
        return str(base)
    off = k - base
    e = val_p(off, p)
    u = off // p**e
    if u == 1:
        return f"{base}+{p}^{e}"
    return f"{base}+{p}^{e}*{u}"
