from __future__ import annotations

from itertools import combinations

import pytest

from goodsets import points as pt
from goodsets.core import contains, fiber_is_empty, frobenius, project, validate_good_set
from goodsets.errors import SubsetLimitError
from goodsets.maximals import (
    absolute_maximals,
    frobenius_fiber_check,
    gaps,
    generate_from_relative_maximals,
    in_integer_fiber,
    maximal_points,
    p_value,
    q_value,
    relative_maximals,
)

from randsets import random_good_set


def _points(mcs):
    return sorted(mc.point for mc in mcs)


# ---------------------------------------------------------------------------
# maximal point examples


def test_maximals_node(s_b):
    mcs = maximal_points(s_b)
    assert _points(mcs) == [(0, 0)]
    assert mcs[0].is_relative and mcs[0].is_absolute


def test_maximals_axes(s_c):
    mcs = maximal_points(s_c)
    assert _points(mcs) == [(0, 0, 0)]
    assert absolute_maximals(s_c) == [(0, 0, 0)]
    assert relative_maximals(s_c) == []


def test_maximals_cusp_gaps(s_a):
    assert _points(maximal_points(s_a)) == [(1,)]
    assert gaps(s_a) == [(1,)]


def test_maximals_tacnode(s_d):
    # both (0,0) and (1,1) have empty fibers
    assert _points(maximal_points(s_d)) == [(0, 0), (1, 1)]


def test_maximal_classification_invariants(s_b, s_c, s_d):
    for E in (s_b, s_c, s_d):
        for mc in maximal_points(E):
            assert mc.is_maximal
            assert mc.p < mc.q
            assert 0 <= mc.p <= E.r
            assert 1 <= mc.q <= E.r + 1
            if mc.is_relative or mc.is_absolute:
                assert mc.is_maximal


# ---------------------------------------------------------------------------
# p and q


def test_p_value_examples(s_b, e_m, nn2):
    assert p_value(s_b, (0, 0)) == 1
    assert p_value(nn2, (0, 0)) == 0
    assert p_value(e_m, (1, 1)) == 0


def test_q_value_examples(s_b, nn2):
    assert q_value(s_b, (0, 0)) == 2
    assert q_value(nn2, (0, 0)) == 1
    assert q_value(nn2, (-1, -1)) == 3


def test_p_positive_iff_fiber_empty(s_b, s_c, s_d, nn2):
    from goodsets.core import full_fiber_is_empty

    for E in (s_b, s_c, s_d, nn2):
        lo = pt.sub(E.min, pt.ones(E.r))
        hi = pt.add(E.conductor, pt.ones(E.r))
        for alpha in pt.box(lo, hi):
            assert (p_value(E, alpha) >= 1) == full_fiber_is_empty(E, alpha)
            # q <= r iff every closed singleton fiber is nonempty
            assert (q_value(E, alpha) <= E.r) == all(
                not fiber_is_empty(E, alpha, (lab,), closed=True) for lab in E.labels
            ) == contains(E, alpha)


def _ell_form_p(E, alpha):
    # largest n such that for all J with #J = j <= n and all i in J the
    # closed fiber of alpha + e_{J^c} in direction i is empty
    r = E.r
    best = 0
    for j in range(1, r + 1):
        ok = True
        for J in combinations(range(r), j):
            bump = tuple(alpha[k] + (0 if k in J else 1) for k in range(r))
            for i in J:
                if not fiber_is_empty(E, bump, (E.labels[i],), closed=True):
                    ok = False
        if ok:
            best = j
        else:
            break
    return best


def _ell_form_q(E, alpha):
    r = E.r
    best = r + 1
    for j in range(r, 0, -1):
        ok = True
        for J in combinations(range(r), j):
            bump = tuple(alpha[k] + (0 if k in J else 1) for k in range(r))
            for i in J:
                if fiber_is_empty(E, bump, (E.labels[i],), closed=True):
                    ok = False
        if ok:
            best = j
        else:
            break
    return best


def test_pq_length_form_agrees_with_fiber_form(s_b, s_c, s_d):
    for E in (s_b, s_c, s_d):
        lo = pt.sub(E.min, pt.ones(E.r))
        hi = pt.add(E.conductor, pt.ones(E.r))
        for alpha in pt.box(lo, hi):
            assert p_value(E, alpha) == _ell_form_p(E, alpha)
            assert q_value(E, alpha) == _ell_form_q(E, alpha)


def test_pq_sentence_monotonicity(s_c, s_d):
    # p(alpha, n) implies p(alpha, n-1); q(alpha, n-1) implies q(alpha, n):
    # the defining families are downward/upward closed, so the max/min
    # formulas are exhaustive scans
    for E in (s_c, s_d):
        for alpha in pt.box(E.min, E.conductor):
            p = p_value(E, alpha)
            for j in range(1, p + 1):
                assert all(
                    fiber_is_empty(E, alpha, A)
                    for A in combinations(E.labels, j)
                )
            q = q_value(E, alpha)
            for j in range(q, E.r + 1):
                assert all(
                    not fiber_is_empty(E, alpha, A)
                    for A in combinations(E.labels, j)
                )


def test_remark_classification_matches_pq(s_b, s_c, s_d):
    for E in (s_b, s_c, s_d):
        for mc in maximal_points(E):
            assert mc.is_relative == (mc.p == 1 and mc.q == 2)
            assert mc.is_absolute == (mc.p == E.r - 1 and mc.q == E.r)


def test_subset_cap(monkeypatch, s_b):
    monkeypatch.setenv("GOODSET_MAX_R", "1")
    with pytest.raises(SubsetLimitError):
        p_value(s_b, (0, 0))


# ---------------------------------------------------------------------------
# generation theorem


def test_generation_examples_node():
    N1 = validate_good_set(1, [(0,)], labels=[1])
    N2 = validate_good_set(1, [(0,)], labels=[2])
    G = generate_from_relative_maximals([N1, N2], [(0, 0)], ((0, 0), (1, 1)))
    assert G.small == frozenset({(0, 0), (1, 1)})


def test_generation_examples_axes(s_c):
    projections = [project(s_c, J) for J in ((1, 2), (1, 3), (2, 3))]
    G = generate_from_relative_maximals(projections, [], ((0, 0, 0), (1, 1, 1)))
    assert G == s_c
    # the projection hypothesis alone prunes e.g. (1,1,0)
    assert not contains(G, (1, 1, 0))


def test_generation_nothing_excluded():
    N1 = validate_good_set(1, [(0,)], labels=[1])
    N2 = validate_good_set(1, [(0,)], labels=[2])
    G = generate_from_relative_maximals([N1, N2], [], ((0, 0), (0, 0)))
    assert G.conductor == (0, 0)


def test_generation_round_trip_fixtures(s_a, s_b, s_c, s_d):
    for E in (s_a, s_b, s_c, s_d):
        if E.r == 1:
            projections = []
        else:
            projections = [
                project(E, tuple(l for l in E.labels if l != skip))
                for skip in E.labels
            ]
        G = generate_from_relative_maximals(
            projections,
            relative_maximals(E),
            (E.min, E.conductor),
            labels=E.labels,
        )
        assert G == E


@pytest.mark.parametrize("seed", range(10))
def test_generation_round_trip_random(seed):
    E = random_good_set(1000 + seed, r=(seed % 3) + 1, max_conductor=4)
    if E.r == 1:
        projections = []
    else:
        projections = [
            project(E, tuple(l for l in E.labels if l != skip)) for skip in E.labels
        ]
    G = generate_from_relative_maximals(
        projections, relative_maximals(E), (E.min, E.conductor), labels=E.labels
    )
    assert G == E


def test_in_integer_fiber():
    assert in_integer_fiber((0, 3), (0, 0))
    assert not in_integer_fiber((0, 0), (0, 0))
    assert in_integer_fiber((5,), (5,))  # r=1: the fiber of a is {a}


# ---------------------------------------------------------------------------
# frobenius fiber


def test_frobenius_fiber_empty(s_a, s_b, s_c, s_d):
    for S in (s_a, s_b, s_c, s_d):
        assert frobenius_fiber_check(S)


def test_frobenius_membership_in_maximals(s_a, s_b, s_c, s_d):
    # on the Gorenstein fixtures f(S) is a relative maximal; on the axes it
    # is absolute but not relative
    for S, relative in ((s_b, True), (s_d, True), (s_a, True), (s_c, False)):
        f = frobenius(S)
        mcs = {mc.point: mc for mc in maximal_points(S)}
        assert f in mcs
        assert mcs[f].is_relative == relative
        if not relative:
            assert mcs[f].is_absolute
