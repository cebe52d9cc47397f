from __future__ import annotations

import random

import pytest

from goodsets import points as pt
from goodsets.colength import (
    colength,
    colength_r2_formula,
    colength_recursive_formula,
    delta_invariant,
    ell_step,
    ell_truncation,
    gorenstein_length_test,
)
from goodsets.core import orthant, validate_good_set
from goodsets.duality import symmetry_check
from goodsets.errors import GoodSetError

from randsets import random_good_set, random_semigroup


def test_ell_step_examples(s_b, nn2):
    assert ell_step(s_b, (0, 0), 1) == 1
    assert ell_step(s_b, (1, 0), 2) == 0
    assert ell_step(nn2, (3, 1), 1) == 1
    assert ell_step(nn2, (0, 0), 2) == 1


def test_ell_truncation_examples(s_b, s_c, s_d):
    assert ell_truncation(s_b, (1, 1)) == 1
    assert ell_truncation(s_c, (1, 1, 1)) == 1
    assert ell_truncation(s_d, (2, 2)) == 2


def test_ell_truncation_needs_dominating_gamma(s_b):
    with pytest.raises(GoodSetError):
        ell_truncation(s_b, (-1, 0))


def test_colength_examples(s_b, s_c, e_m, nn3):
    assert colength(s_b, e_m) == 1
    assert colength(nn3, s_c) == 2
    assert colength(s_b, s_b) == 0


def test_colength_requires_containment(s_b, nn2):
    with pytest.raises(GoodSetError):
        colength(s_b, nn2)


def test_r2_formula_examples(s_b, s_d, e_m):
    assert colength_r2_formula(s_b, (1, 1)) == 1
    # tacnode at its conductor: spans 2+2, no projection gaps, two maximals
    assert colength_r2_formula(s_d, (2, 2)) == 2
    assert colength_r2_formula(e_m, (1, 1)) == 0


def test_r2_formula_guards(s_a, s_b):
    with pytest.raises(GoodSetError):
        colength_r2_formula(s_a, (2,))
    with pytest.raises(GoodSetError):
        colength_r2_formula(s_b, (0, 0))


def test_recursive_formula_examples(s_a, s_b, s_c):
    assert colength_recursive_formula(s_c, (1, 1, 1)) == 1
    assert colength_recursive_formula(s_b, (1, 1)) == 1
    assert colength_recursive_formula(s_a, (2,)) == 1


def test_delta_examples(s_a, s_b, s_c, s_d):
    assert delta_invariant(s_a) == 1
    assert delta_invariant(s_b) == 1
    assert delta_invariant(s_c) == 2
    assert delta_invariant(s_d) == 2


def test_gorenstein_length_examples(s_a, s_b, s_c, s_d):
    assert gorenstein_length_test(s_a)
    assert gorenstein_length_test(s_b)
    assert not gorenstein_length_test(s_c)
    assert gorenstein_length_test(s_d)


def test_chain_independence(s_b, s_c, s_d):
    rng = random.Random(7)
    for E in (s_b, s_c, s_d):
        gamma = pt.add(E.conductor, pt.ones(E.r))
        expected = ell_truncation(E, gamma)
        for _ in range(10):
            assert ell_truncation(E, gamma, rng=rng) == expected


def test_three_method_agreement_on_fixtures(s_a, s_b, s_c, s_d, e_m):
    for E in (s_a, s_b, s_c, s_d, e_m):
        for bump in pt.box(pt.zeros(E.r), (2,) * E.r):
            gamma = pt.add(E.conductor, bump)
            chain = ell_truncation(E, gamma)
            assert colength_recursive_formula(E, gamma) == chain
            if E.r == 2:
                assert colength_r2_formula(E, gamma) == chain


def test_additivity(s_b, e_m, nn2):
    # E_m ⊆ S_B ⊆ N^2
    assert colength(nn2, e_m) == colength(nn2, s_b) + colength(s_b, e_m)


def test_gamma_stability(s_b, e_m):
    base = colength(s_b, e_m)
    for bump in pt.box((0, 0), (2, 2)):
        gamma = pt.add(pt.join(s_b.conductor, e_m.conductor), bump)
        assert ell_truncation(s_b, gamma) - ell_truncation(e_m, gamma) == base


@pytest.mark.parametrize("seed", range(15))
def test_three_method_agreement_random(seed):
    E = random_good_set(500 + seed, r=(seed % 3) + 1, max_conductor=5)
    gamma = E.conductor
    chain = ell_truncation(E, gamma)
    assert colength_recursive_formula(E, gamma) == chain
    if E.r == 2:
        assert colength_r2_formula(E, gamma) == chain
    rng = random.Random(seed)
    assert ell_truncation(E, gamma, rng=rng) == chain


@pytest.mark.parametrize("seed", range(8))
def test_length_test_matches_symmetry_on_random_semigroups(seed):
    S = random_semigroup(900 + seed, r=(seed % 2) + 1, max_conductor=4)
    symmetric, _ = symmetry_check(S)
    assert gorenstein_length_test(S) == symmetric


def test_length_test_matches_symmetry_on_fixtures(s_a, s_b, s_c, s_d):
    for S in (s_a, s_b, s_c, s_d):
        assert gorenstein_length_test(S) == symmetry_check(S)[0]
