"""Word-size kernels for alternating binomial power sums.

The hot quantity everywhere in the valuation search is

    D_m(j) = sum_{0 < i <= j, p !| i} (-1)^i C(j, i) i^k (i^P - 1)^m

reduced modulo a machine-word modulus: 2^64 for p == 2 (native uint64
wraparound) and the largest p^M below 2^32 for odd p, so that a product of two
residues still fits in 64 bits.  m = 0 gives the partial Stirling number
a_p(k, j); m >= 1 gives the Mahler coefficients of k' -> a_p(k', j) along the
class k + P*Z_p.  The kernels return valuations, capped at the word precision.

Two interchangeable backends exist: a numba ``@njit`` loop and a vectorized
numpy path.  Set ``PADIC_STIRLING_DISABLE_JIT=1`` (or uninstall numba) to force
the numpy path.  ``moment_valuations_bigint`` is the arbitrary-precision route
used when the word precision is not enough.
"""

from __future__ import annotations

import operator
import os

import numpy as np

from .exact_arith import unit_group_exponent


def _env_flag(name: str) -> bool:
    return os.environ.get(name, "").strip().lower() in {"1", "true", "yes", "on"}


try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_JIT = HAVE_NUMBA and not _env_flag("PADIC_STIRLING_DISABLE_JIT")

_U64_ONE = np.uint64(1)
_U64_ZERO = np.uint64(0)


def word_modulus(p: int) -> tuple[int, int]:
    """(modulus, precision) of the word kernels; modulus 0 encodes 2^64."""
    if p == 2:
        return 0, 64
    prec = 0
    q = 1
    while q * p < (1 << 32):
        q *= p
        prec += 1
    return q, prec


def _reduce_exponent(e: int, p: int, prec: int) -> int:
    # only units are ever raised to powers, so exponents live mod the group exponent
    return e % unit_group_exponent(p, prec)


# --------------------------------------------------------------------------
# numpy backend
# --------------------------------------------------------------------------


def _np_mul(a, b, q):
    if q == 0:
        return a * b
    return (a * b) % np.uint64(q)


def _np_powmod(base: np.ndarray, e: int, q: int) -> np.ndarray:
    result = np.ones_like(base)
    b = base.copy()
    while e:
        if e & 1:
            result = _np_mul(result, b, q)
        e >>= 1
        if e:
            b = _np_mul(b, b, q)
    return result


def _np_valuations(vals: np.ndarray, p: int, q: int, prec: int) -> np.ndarray:
    out = np.full(vals.shape, prec, dtype=np.int64)
    v = vals.copy()
    live = v != 0
    if p == 2:
        # trailing-zero count of nonzero words
        low = v & (~v + _U64_ONE)
        out[live] = np.log2(low[live].astype(np.float64)).astype(np.int64)
        return out
    e = np.zeros(vals.shape, dtype=np.int64)
    pp = np.uint64(p)
    while live.any():
        divisible = live & (v % pp == 0)
        e[divisible] += 1
        v[divisible] //= pp
        live = divisible
    nz = vals != 0
    out[nz] = e[nz]
    return out


def _moments_numpy(p, k, period, m_max, j_lo, j_hi, q, prec):
    with np.errstate(over="ignore"):
        idx = np.arange(j_hi, dtype=np.uint64)
        unit = (np.arange(j_hi) % p) != 0
        base = idx if q == 0 else idx % np.uint64(q)
        w = np.where(unit, _np_powmod(base, k, q), _U64_ZERO)
        if m_max > 0:
            y = _np_powmod(base, period, q)
            y = (y - _U64_ONE) if q == 0 else (y + np.uint64(q) - _U64_ONE) % np.uint64(q)
            y = np.where(unit, y, _U64_ZERO)
        # (-1)^i folded into the weight: negate odd-index entries
        odd = (np.arange(j_hi) & 1).astype(bool)
        if q == 0:
            w = np.where(odd, ~w + _U64_ONE, w)
        else:
            qq = np.uint64(q)
            w = np.where(odd & (w != 0), qq - w, w)
        weights = [w]
        for _ in range(m_max):
            weights.append(_np_mul(weights[-1], y, q))
        W = np.stack(weights)  # (m_max+1, j_hi)

        out = np.zeros((m_max + 1, j_hi - j_lo), dtype=np.uint64)
        row = np.zeros(j_hi, dtype=np.uint64)
        row[0] = 1
        for j in range(1, j_hi):
            row[1 : j + 1] = row[1 : j + 1] + row[0:j]
            if q != 0:
                row[1 : j + 1] %= np.uint64(q)
            if j >= j_lo:
                terms = _np_mul(W[:, : j + 1], row[: j + 1], q)
                s = terms.sum(axis=1, dtype=np.uint64)
                if q != 0:
                    s %= np.uint64(q)
                out[:, j - j_lo] = s
        if j_lo == 0:
            out[:, 0] = W[:, 0]
    return _np_valuations(out, p, q, prec)


# --------------------------------------------------------------------------
# numba backend
# --------------------------------------------------------------------------

if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _nb_mul(a, b, q):
        if q == 0:
            return a * b
        return (a * b) % q

    @numba.njit(cache=True)
    def _nb_powmod(b, e, q):
        r = np.uint64(1)
        while e > 0:
            if e & np.uint64(1):
                r = _nb_mul(r, b, q)
            e = e >> np.uint64(1)
            if e > 0:
                b = _nb_mul(b, b, q)
        return r

    @numba.njit(cache=True)
    def _nb_val(x, p, prec):
        if x == 0:
            return prec
        if p == 2:
            e = 0
            while (x & np.uint64(1)) == 0:
                x = x >> np.uint64(1)
                e += 1
            return e
        e = 0
        pp = np.uint64(p)
        while x % pp == 0:
            x = x // pp
            e += 1
        return e

    @numba.njit(cache=True)
    def _moments_jit(p, k, period, m_max, j_lo, j_hi, q, prec):
        one = np.uint64(1)
        zero = np.uint64(0)
        w = np.zeros(j_hi, dtype=np.uint64)
        y = np.zeros(j_hi, dtype=np.uint64)
        for i in range(1, j_hi):
            if i % p == 0:
                continue
            b = np.uint64(i)
            if q != 0:
                b = b % q
            wi = _nb_powmod(b, k, q)
            if i & 1:
                if q == 0:
                    wi = zero - wi
                elif wi != 0:
                    wi = q - wi
            w[i] = wi
            if m_max > 0:
                yi = _nb_powmod(b, period, q)
                if q == 0:
                    y[i] = yi - one
                else:
                    y[i] = (yi + q - one) % q
        row = np.zeros(j_hi, dtype=np.uint64)
        row[0] = one
        acc = np.zeros(m_max + 1, dtype=np.uint64)
        out = np.zeros((m_max + 1, j_hi - j_lo), dtype=np.int64)
        for j in range(0, j_hi):
            if j > 0:
                for i in range(j, 0, -1):
                    s = row[i] + row[i - 1]
                    if q != 0:
                        s = s % q
                    row[i] = s
            if j < j_lo:
                continue
            for m in range(m_max + 1):
                acc[m] = zero
            for i in range(1, j + 1):
                if w[i] == 0:
                    continue
                t = _nb_mul(row[i], w[i], q)
                for m in range(m_max + 1):
                    s = acc[m] + t
                    if q != 0:
                        s = s % q
                    acc[m] = s
                    if m < m_max:
                        t = _nb_mul(t, y[i], q)
            for m in range(m_max + 1):
                out[m, j - j_lo] = _nb_val(acc[m], p, prec)
        return out


def moment_valuations(
    p: int, k: int, period: int, m_max: int, j_lo: int, j_hi: int, *, use_jit: bool | None = None
) -> np.ndarray:
    """Valuations of D_m(j) for 0 <= m <= m_max, j_lo <= j < j_hi, at word precision.

    Entries equal to the word precision mean "at least that".  Negative k and
    huge k are fine: exponents are reduced modulo the unit-group exponent.
    """
    q, prec = word_modulus(p)
    k = _reduce_exponent(k, p, prec)
    period = _reduce_exponent(period, p, prec)
    if j_hi <= j_lo:
        return np.zeros((m_max + 1, 0), dtype=np.int64)
    jit = USE_JIT if use_jit is None else (use_jit and HAVE_NUMBA)
    if jit:
        return _moments_jit(
            p, np.uint64(k), np.uint64(period), m_max, j_lo, j_hi, np.uint64(q), prec
        )
    return _moments_numpy(p, k, period, m_max, j_lo, j_hi, q, prec)


def moment_valuations_bigint(
    p: int, k: int, period: int, m_max: int, j_lo: int, j_hi: int, prec: int
) -> list[list[int]]:
    """Arbitrary-precision twin of :func:`moment_valuations` (modulus p^prec)."""
    q = p**prec
    lam = unit_group_exponent(p, prec)
    k %= lam
    period %= lam
    w = [0] * j_hi
    y = [0] * j_hi
    for i in range(1, j_hi):
        if i % p:
            wi = pow(i, k, q)
            w[i] = (-wi) % q if i & 1 else wi
            if m_max:
                y[i] = (pow(i, period, q) - 1) % q
    out = [[prec] * (j_hi - j_lo) for _ in range(m_max + 1)]

    def val(s: int) -> int:
        if p == 2:
            return (s & -s).bit_length() - 1
        e = 0
        while s % p == 0:
            s //= p
            e += 1
        return e

    # exact Pascal rows: C(j, i) has about j bits, comparable to q, so one
    # reduction per sum is cheaper than reducing every entry
    row = [1]
    for j in range(0, j_hi):
        if j > 0:
            row = [1, *map(operator.add, row, row[1:]), 1]
        if j < j_lo:
            continue
        if m_max == 0:
            s = sum(map(operator.mul, row, w)) % q
            if s:
                out[0][j - j_lo] = val(s)
            continue
        terms = [r * wi % q for r, wi in zip(row, w)]
        for m in range(m_max + 1):
            s = sum(terms) % q
            if s:
                out[m][j - j_lo] = val(s)
            if m < m_max:
                terms = [t * yy % q for t, yy in zip(terms, y)]
    return out
