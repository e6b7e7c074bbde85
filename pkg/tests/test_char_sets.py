import pytest
from hypothesis import given
from hypothesis import strategies as st

from padic_stirling.char_sets import (
    SpecialPair,
    is_special,
    phi,
    phi_gen,
    phi_gen_criterion,
    sparse,
    special_pairs_up_to,
    t_prime_member,
    t_set_member,
    tau,
    tau_definition,
    tech_lemma_check,
    thm2_member,
    thm3_member,
)
from padic_stirling.partial_stirling import a_p_val, a_valuations, s_p


def test_p2_member_examples():
    assert thm2_member(5)
    assert not thm2_member(7)
    assert not thm2_member(8)
    assert [n for n in range(1, 20) if thm2_member(n)] == [1, 2, 3, 4, 5, 6, 9, 10, 11, 12, 17, 18, 19]


def test_t_sets():
    assert t_set_member(4) and not t_set_member(5)
    assert not t_prime_member(5) and t_prime_member(3)
    assert t_set_member(0) and t_prime_member(0)


def test_p3_member_examples():
    assert thm3_member(10)
    assert not thm3_member(6)
    assert thm3_member(2)
    with pytest.raises(ValueError):
        thm3_member(0)


def test_both_descriptions_agree_far_out():
    # membership raises if the two forms ever disagree
    for n in range(1, 20_000):
        thm2_member(n)
        thm3_member(n)


def test_sparse_and_special_pairs():
    assert not sparse(5)
    pairs = {(q.x, q.i) for q in special_pairs_up_to(3**8)}
    assert {(9, 0), (10, 1), (30, 3), (91, 10)} <= pairs
    assert (3**7 + 3**3 + 3, 3**3 + 3) in pairs


def test_special_pair_construction_chain():
    x, i = 1, 0
    for step in ("F1", "F2", "F2", "F1", "F1")[::-1]:
        x, i = (3 * x, 3 * i) if step == "F1" else (9 * x + 1, 9 * i + 1)
    assert (x, i) == (2217, 30)
    assert is_special(x, i)
    with pytest.raises(ValueError):
        SpecialPair(5, 2)


def test_special_pairs_closure_vs_filter_large():
    assert len(special_pairs_up_to(3**10)) == sum(1 for x in range(1, 3**10 + 1) if sparse(x))


def test_tau_examples():
    assert tau(92, 30, 1) == 1
    assert tau(92, 27, -1) == 0
    assert tau(92, 33, -1) == 0
    for n in range(0, 30):
        for k in range(n % 2, n + 1, 2):
            assert tau(n, k, -1) == 0


def test_tau_closed_form_matches_definition():
    for n in range(0, 82):
        for k in range(0, n + 1):
            for eps in (1, -1):
                assert tau(n, k, eps) == tau_definition(n, k, eps), (n, k, eps)


def test_phi_values():
    assert phi(3) != 0 and phi(10) != 0
    assert phi(6) == 0
    for x in range(0, 21):
        assert phi(9 * x + 6) == 0 == phi(9 * x + 8)


def test_phi_at_one_and_two():
    # phi(1) vanishes although nu_3(a_3(0, 1)) = 0 = s_3(1): the criterion misses n = 1
    assert phi(1) == 0
    assert a_p_val(0, 1, 3) == s_p(1, 3) == 0
    # a_3(1, 2) = 0, so phi(2) = 0 is the right answer there
    assert phi(2) == 0
    assert phi_gen_criterion(2, 3)


def test_phi_criterion_from_two():
    for n in range(2, 244):
        s = s_p(n, 3)
        assert (phi(n) != 0) == (a_p_val(n - 1, n, 3) == s), n


def test_phi_gen_specializes_to_phi():
    for n in range(1, 60):
        assert phi_gen(n, n) == (True, phi(n))


def test_phi_gen_on_nine_t_plus_two():
    for x in range(0, 30):
        if t_set_member(x):
            assert phi_gen_criterion(9 * x + 2, 9 * x + 3)


def test_phi_gen_against_oracle():
    for n in range(2, 121):
        s = s_p(n, 3)
        top = 9 * (n // 9) + 9
        vals = a_valuations(n - 1, 3, n, top + 9, s + 1)
        for N in range(n, top + 9):
            assert phi_gen_criterion(n, N) == (vals[N - n] == s), (n, N)


def test_phi_gen_requires_N_at_least_n():
    with pytest.raises(ValueError):
        phi_gen(5, 4)


def test_tech_lemma():
    rep = tech_lemma_check(60)
    assert rep.ok, rep.lines()


@given(st.integers(1, 10**6))
def test_p2_member_parity_form(n):
    # C(3s, s) odd  <=>  binary(s) has no adjacent 1's, inside the membership call
    assert thm2_member(n) in (True, False)
