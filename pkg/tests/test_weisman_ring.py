import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from padic_stirling.weisman_ring import (
    CycPoly,
    kron_bridge_p2,
    one_minus_x,
    p_poly,
    predicted_poly,
    psi,
    q_poly,
    s1,
    s1_closed_form,
    s2,
    verify_mian,
)

odd_primes = st.sampled_from([3, 5, 7])


def poly(p):
    return st.tuples(*[st.integers(0, p - 1)] * p).map(lambda c: CycPoly(p, c))


def test_s1_examples():
    assert s1(3, 2, 0) == 1
    assert s1(3, 1, 2) == 0
    assert s1(3, 1, 1) == -1
    assert s1_closed_form(3, 1, 1) == 2 == s1(3, 1, 1) % 3


def test_s2_examples():
    assert s2(3, 1, 0) == 1


def test_even_prime_refused():
    with pytest.raises(ValueError):
        s1(2, 3, 0)
    with pytest.raises(ValueError):
        psi(2)


def test_psi_examples():
    assert psi(3).coeffs == (0, 2, 0)
    assert psi(5)[1] == 5 - 1  # alpha_1 = -1
    for p in (3, 5, 7, 11):
        assert psi(p).at_one() == p - 1


def test_p_poly_example():
    assert p_poly(3, 2) == one_minus_x(3) ** 2 == CycPoly(3, (1, 1, 1))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_p_q_predicted(p):
    for n in range(1, 80):
        assert p_poly(p, n) == q_poly(p, n) == predicted_poly(p, n), n


@pytest.mark.parametrize("p", [3, 5, 7])
def test_verify_mian_passes(p):
    rep = verify_mian(p, 60, seed=1)
    assert rep.ok, rep.lines()


def test_bridge():
    assert kron_bridge_p2(40).ok


class TestRing:
    @given(odd_primes.flatmap(lambda p: st.tuples(poly(p), poly(p), poly(p))))
    def test_axioms(self, abc):
        a, b, c = abc
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a + (-a) == CycPoly.const(a.prime, 0)

    def test_x_to_the_p_is_one(self):
        for p in (3, 5, 7):
            x = CycPoly.monomial(p, 1)
            assert x**p == CycPoly.const(p, 1)

    def test_coefficient_count_checked(self):
        with pytest.raises(ValueError):
            CycPoly(3, (1, 2))

    def test_mixed_primes_refused(self):
        with pytest.raises(ValueError):
            CycPoly.const(3, 1) + CycPoly.const(5, 1)

    def test_antisymmetric_span_random(self):
        rng = random.Random(7)
        for p in (3, 5, 7):
            for t in range(p):
                g = CycPoly.const(p, 0)
                for i in range(p):
                    c = rng.randrange(p)
                    g = g + CycPoly.monomial(p, i, c) - CycPoly.monomial(p, t - i, c)
                assert g.in_antisymmetric_span(t)
                assert (g * psi(p)).in_antisymmetric_span(t - 1)
