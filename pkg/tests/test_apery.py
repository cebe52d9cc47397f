from __future__ import annotations

import pytest

from goodsets import points as pt
from goodsets.apery import (
    apery_membership,
    apery_symmetry_check,
    apery_window,
    gap_decomposition,
)
from goodsets.core import contains
from goodsets.errors import GoodSetError
from goodsets.maximals import gaps


def test_apery_membership_examples(s_a, s_d):
    assert apery_membership(s_a, (2,), (3,))
    assert not apery_membership(s_a, (2,), (4,))
    assert apery_membership(s_d, (1, 1), (3, 2))


def test_apery_membership_requires_member(s_a):
    with pytest.raises(GoodSetError):
        apery_membership(s_a, (1,), (3,))


def test_apery_window_examples(s_a, s_b, s_d):
    assert apery_window(s_a, (2,), (5,)) == [(0,), (3,)]
    assert apery_window(s_d, (1, 1), (3, 3)) == [(0, 0), (2, 3), (3, 2)]
    # (1,2) and (2,1) lie in (1,1)+N^2, so they are members of S_B whose
    # difference with (1,1) escapes: they are Apery elements too
    assert apery_window(s_b, (1, 1), (2, 2)) == [(0, 0), (1, 2), (2, 1)]


def test_apery_window_equals_brute_force(s_b, s_c, s_d):
    for E, alpha in ((s_b, (1, 1)), (s_d, (1, 1)), (s_c, (1, 1, 1))):
        hi = pt.add(E.conductor, pt.add(alpha, pt.ones(E.r)))
        got = apery_window(E, alpha, hi)
        brute = [
            b
            for b in pt.box(E.min, hi)
            if contains(E, b) and not contains(E, pt.sub(b, alpha))
        ]
        assert got == brute


def test_apery_window_bad_top(s_b):
    with pytest.raises(GoodSetError):
        apery_window(s_b, (1, 1), (-1, -1))


def test_classical_apery_count(s_a):
    # for a numerical semigroup the Apery set of alpha has alpha elements
    alpha = (2,)
    hi = pt.add(s_a.conductor, alpha)
    assert len(apery_window(s_a, alpha, hi)) == 2


# ---------------------------------------------------------------------------
# gap decomposition


def test_gap_decomposition_examples(s_a, s_b, s_d):
    assert gap_decomposition(s_a, (2,), (1,)) == ((3,), 1)
    assert gap_decomposition(s_d, (1, 1), (1, 0)) == ((3, 2), 2)
    assert gap_decomposition(s_b, (1, 1), (0, 1)) == ((1, 2), 1)


def test_gap_decomposition_errors(s_b):
    with pytest.raises(GoodSetError):
        gap_decomposition(s_b, (1, 1), (1, 1))  # member
    with pytest.raises(GoodSetError):
        gap_decomposition(s_b, (0, 0), (0, 1))  # alpha zero
    with pytest.raises(GoodSetError):
        gap_decomposition(s_b, (5, 0), (0, 1))  # alpha not a member


def test_gap_decomposition_round_trip(s_a, s_b, s_c, s_d):
    # every non-member below the conductor decomposes as a - rho*alpha with
    # a in the Apery set, and the decomposition inverts
    for S in (s_a, s_b, s_c, s_d):
        alpha = S.conductor  # a strictly positive member
        for beta in pt.box(pt.zeros(S.r), S.conductor):
            if contains(S, beta):
                continue
            a, rho = gap_decomposition(S, alpha, beta)
            assert rho >= 1
            assert apery_membership(S, alpha, a)
            assert pt.sub(a, tuple(rho * x for x in alpha)) == beta


# ---------------------------------------------------------------------------
# symmetry via Apery sets


def test_apery_symmetry_passes_on_symmetric(s_a, s_b, s_d):
    for S in (s_a, s_b, s_d):
        for alpha in sorted(S.small):
            if all(x == 0 for x in alpha):
                continue
            report = apery_symmetry_check(S, S, S, alpha)
            assert report.passed, (S, alpha, report)


def test_apery_symmetry_fails_on_axes(s_c):
    report = apery_symmetry_check(s_c, s_c, s_c, (1, 1, 1))
    assert not report.passed
    assert report.counterexample is not None


def test_apery_symmetry_equivalence_form(s_b, s_d):
    # the criterion can be read as an equivalence: a is an Apery element
    # iff a is a member and the reflected fiber is nonempty and contained
    # in the Apery set
    from goodsets.core import frobenius, full_fiber

    for S, alpha in ((s_b, (1, 1)), (s_d, (1, 1))):
        f = frobenius(S)
        hi = pt.add(pt.add(S.conductor, alpha), pt.ones(S.r))
        for a in pt.box(S.min, hi):
            lhs = contains(S, a) and not contains(S, pt.sub(a, alpha))
            target = pt.add(pt.sub(f, a), alpha)
            top = pt.add(pt.add(pt.join(target, S.conductor), alpha), pt.ones(S.r))
            fib = full_fiber(S, target, hi=top)
            rhs = (
                contains(S, a)
                and bool(fib)
                and all(not contains(S, pt.sub(th, alpha)) for th in fib)
            )
            assert lhs == rhs


def test_apery_symmetry_ideal_version(s_b, e_m, nn2):
    # E = value set of the node maximal ideal, Estar = its dual N^2;
    # alpha must lie in both
    report = apery_symmetry_check(e_m, nn2, s_b, (1, 1))
    assert report.passed


def test_apery_symmetry_requires_common_alpha(e_m, nn2, s_b):
    with pytest.raises(GoodSetError):
        apery_symmetry_check(e_m, nn2, s_b, (0, 0))
