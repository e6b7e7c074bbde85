from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from padic_stirling.errors import NotPLocal
from padic_stirling.exact_arith import digit_sum_p
from padic_stirling.t_functions import (
    cbinom,
    eps_quarter,
    quarter_sum_holds,
    recurrence_holds,
    t01_mod3,
    t1_closed_mod2,
    t1_closed_mod3,
    t2_closed_mod2,
    t_exact,
    t_mod_p,
    t_reduce,
)


def test_t_exact_examples():
    assert t_exact(2, 0, 2, 4, 2) == 3
    assert t_exact(2, 0, 2, 6, 2) == Fraction(8, 3)
    assert t_exact(3, 0, 1, 3, 1) == Fraction(-1, 2)


def test_t_mod_p_examples():
    assert t_mod_p(2, 0, 2, 6, 2) == 0
    assert t_mod_p(2, 0, 2, 4, 2) == 1
    assert t_mod_p(3, 0, 1, 3, 1) == 1


def test_t_exact_rejects_bad_arguments():
    with pytest.raises(ValueError):
        t_exact(2, 0, 0, 4, 2)
    with pytest.raises(ValueError):
        t_exact(2, -1, 1, 4, 2)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_values_are_p_integral(p):
    # divisibility is the whole point of the normalization
    for n in range(0, 30):
        for k in range(0, 6):
            for r in range(0, 2 * p):
                for alpha in (1, 2):
                    try:
                        t_exact(p, k, alpha, n, r)
                    except NotPLocal:  # pragma: no cover - would be a real failure
                        pytest.fail(f"T not {p}-integral at k={k} alpha={alpha} n={n} r={r}")


def test_t2_examples():
    assert t2_closed_mod2(0, 4) == 1
    assert t2_closed_mod2(0, 6) == 0
    for n in range(0, 40):
        for k in range(0, n + 1):
            if 4 * k + 2 > n:
                assert t2_closed_mod2(k, n) == 0


def test_t2_matches_oracle():
    for n in range(0, 65):
        for k in range(0, n + 1):
            assert t2_closed_mod2(k, n) == t_mod_p(2, k, 2, n, 2), (k, n)


def test_t1_mod2_examples():
    assert t1_closed_mod2(0, 4, 1) == 1
    assert t1_closed_mod2(0, 6, 0) == 0
    for n in range(1, 10):
        for k in range(max(n, 1), n + 4):
            assert t1_closed_mod2(k, n, 3) == 0


def test_t1_mod2_matches_oracle():
    for n in range(1, 65):
        for k in range(0, n + 2):
            for r in range(4):
                assert t1_closed_mod2(k, n, r) == t_mod_p(2, k, 1, n, r), (k, n, r)


def test_t01_is_kronecker_on_digit_sum_mod2():
    for n in range(1, 65):
        for r in range(2):
            assert t_mod_p(2, 0, 1, n, r) == (1 if digit_sum_p(n, 2) == 1 else 0)


def test_t1_mod3_examples():
    assert t1_closed_mod3(0, 3, 1) == 1
    for e in range(0, 4):
        for r in range(6):
            assert t1_closed_mod3(0, 2 * 3**e, r) == 2
    for n in range(2, 60, 3):
        for k in range(n % 2 == 0, n + 1, 2):
            assert t1_closed_mod3(k, n, 4) == 0


def test_t1_mod3_matches_oracle():
    for n in range(1, 82):
        for k in range(0, n + 2):
            for r in range(9):
                assert t1_closed_mod3(k, n, r) == t_mod_p(3, k, 1, n, r), (k, n, r)
        for r in range(9):
            assert t01_mod3(n, r) == t_mod_p(3, 0, 1, n, r), (n, r)


def test_n_zero_is_outside_the_tables():
    # a single i = 0 term: T_{0,1}(0, r) = [p | r]
    assert t_mod_p(2, 0, 1, 0, 0) == 1 != t1_closed_mod2(0, 0, 0)
    assert t_mod_p(3, 0, 1, 0, 0) == 1
    with pytest.raises(ValueError):
        t01_mod3(0, 0)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_reduction(p):
    for alpha in (1, 2):
        for n in range(0, 51 if p < 5 else 30):
            for k in range(0, n + 1, 1 if p < 5 else 3):
                for r in range(p ** (alpha + 1)):
                    assert t_reduce(p, k, alpha, n, r) == t_mod_p(p, k, alpha + 1, n, r), (alpha, n, k, r)


def test_reduction_identity_factor():
    # rbar = nbar = 0: factor C(0,0) = 1 with sign +1
    for n in range(0, 40, 3):
        assert t_reduce(3, 0, 1, n, 3) == t_mod_p(3, 0, 1, n // 3, 1)


@given(st.sampled_from([2, 3]), st.integers(1, 30), st.integers(-4, 10), st.data())
def test_recurrence_exact(p, n, r, data):
    k = data.draw(st.integers(1, n))
    assert recurrence_holds(p, k, n, r)


def test_quarter_sums():
    for n in range(2, 65):
        for r in range(4):
            assert quarter_sum_holds(n, r), (n, r)
    # n = 2: C(2,0) = 1 = 1 + 0, C(2,1) = 2 = 1 + 1
    assert [eps_quarter(2, r) for r in range(4)] == [0, 1, 0, -1]


def test_cbinom():
    assert cbinom(-1, 0) == 0
    assert cbinom(5, 2) == 10
    assert cbinom(2, 5) == 0
