from __future__ import annotations

import random
from fractions import Fraction

import pytest

from goodsets import points as pt
from goodsets.core import contains, project, validate_good_set
from goodsets.curve import (
    CurveRing,
    IdealSpec,
    ZeroDivisorVerdict,
    curve_from_dict,
    curve_invariants_report,
    dual_value_set,
    intersection_multiplicity,
    value,
    value_set,
)
from goodsets.duality import dual_transform, sum_containment_check
from goodsets.errors import BoundTooSmallError, CurveError, ExpressionError


# ---------------------------------------------------------------------------
# evaluation and values


def test_evaluate_node(node_curve):
    h = node_curve.evaluate("x+y")
    assert value(h) == (1, 1)
    hx = node_curve.evaluate("x")
    v = value(hx)
    assert isinstance(v, ZeroDivisorVerdict)
    assert v.zero_branches == (2,)


def test_evaluate_tacnode(tacnode_curve):
    h = tacnode_curve.evaluate("y - x^2")
    v = value(h)
    assert isinstance(v, ZeroDivisorVerdict)
    assert v.zero_branches == (1,)


def test_evaluate_unit(node_curve):
    assert value(node_curve.evaluate("1+x")) == (0, 0)


def test_evaluate_parse_error(node_curve):
    with pytest.raises(ExpressionError):
        node_curve.evaluate("x +")
    with pytest.raises(ExpressionError):
        node_curve.evaluate("w + x")


def test_generators_must_vanish_at_origin():
    with pytest.raises(CurveError):
        CurveRing(["x"], [{"x": "1+t"}], truncation=8)


# ---------------------------------------------------------------------------
# value sets of the fixtures


def test_value_set_cusp(cusp_curve, s_a):
    assert value_set(cusp_curve, None, (8,)) == s_a


def test_value_set_node(node_curve, s_b, e_m):
    assert value_set(node_curve, None, (4, 4)) == s_b
    assert value_set(node_curve, "m", (4, 4)) == e_m


def test_value_set_axes(axes_curve, s_c):
    assert value_set(axes_curve, None, (3, 3, 3)) == s_c


def test_value_set_tacnode(tacnode_curve, s_d):
    assert value_set(tacnode_curve, None, (6, 6)) == s_d


def test_value_set_requires_bound(node_curve):
    with pytest.raises(CurveError):
        value_set(node_curve, None, None)


def test_value_set_bound_too_small(tacnode_curve):
    with pytest.raises(BoundTooSmallError):
        value_set(tacnode_curve, None, (1, 0))


def test_fractional_ideal_with_denominator():
    curve = CurveRing(
        ["x", "y"],
        [{"x": "t", "y": "0"}, {"x": "0", "y": "t"}],
        truncation=12,
        ideals={"frac": IdealSpec("frac", ("x", "y"), denominator="x+y")},
    )
    E = value_set(curve, "frac", (3, 3))
    # (1/(x+y)) * (x, y) has values m + N^2 shifted down by (1,1)
    assert E.min == (0, 0)
    assert E.conductor == (0, 0)


def test_value_axioms_random_elements(node_curve, tacnode_curve):
    rng = random.Random(3)
    for curve in (node_curve, tacnode_curve):
        exprs = ["x+y", "x^2+y", "x+y^2", "x^2-y^2+x^3", "x^3+y^2"]
        elems = [curve.evaluate(e) for e in exprs]
        regular = [h for h in elems if not isinstance(value(h), ZeroDivisorVerdict)]
        for _ in range(20):
            f, g = rng.choice(regular), rng.choice(regular)
            prod = tuple(a * b for a, b in zip(f.components, g.components))
            orders = tuple(s.order for s in prod)
            if all(o is not None for o in orders):
                assert orders == pt.add(value(f), value(g))
            ssum = tuple(a + b for a, b in zip(f.components, g.components))
            sorders = tuple(s.order for s in ssum)
            m = pt.meet(value(f), value(g))
            for k, o in enumerate(sorders):
                assert o is None or o >= m[k]


# ---------------------------------------------------------------------------
# projections match subcurves


def test_projection_consistency_axes(axes_curve, s_c):
    S = value_set(axes_curve, None, (3, 3, 3))
    sub = CurveRing(
        ["x", "y", "z"],
        [
            {"x": "t", "y": "0", "z": "0"},
            {"x": "0", "y": "t", "z": "0"},
        ],
        truncation=12,
    )
    S12 = value_set(sub, None, (3, 3))
    P = project(S, (1, 2))
    assert P.small == S12.small and P.conductor == S12.conductor


def test_projection_consistency_tacnode(tacnode_curve):
    S = value_set(tacnode_curve, None, (6, 6))
    branch1 = CurveRing(["x", "y"], [{"x": "t", "y": "t^2"}], truncation=12)
    S1 = value_set(branch1, None, (6,))
    P = project(S, (1,))
    assert P.small == S1.small and P.conductor == S1.conductor


# ---------------------------------------------------------------------------
# duals


def test_dual_node(node_curve, s_b, nn2, e_m):
    assert dual_value_set(node_curve, "m", (4, 4)) == nn2
    assert dual_value_set(node_curve, None, (4, 4)) == s_b


def test_dual_axes(axes_curve, nn3):
    assert dual_value_set(axes_curve, "m", (3, 3, 3)) == nn3


def test_dual_matches_transform_on_gorenstein(node_curve, tacnode_curve):
    # two independent routes to the dual value set: linear algebra on the
    # curve and the combinatorial transform
    for curve, bound in ((node_curve, (4, 4)), (tacnode_curve, (5, 5))):
        S = value_set(curve, None, bound)
        for ideal in (None, "m"):
            E = value_set(curve, ideal, bound)
            assert dual_value_set(curve, ideal, bound) == dual_transform(E, S)


def test_dual_sum_containment(node_curve, axes_curve):
    for curve, bound in ((node_curve, (4, 4)), (axes_curve, (3, 3, 3))):
        S = value_set(curve, None, bound)
        for ideal in (None, "m"):
            E = value_set(curve, ideal, bound)
            Estar = dual_value_set(curve, ideal, bound)
            assert sum_containment_check(E, Estar, S)


# ---------------------------------------------------------------------------
# intersection multiplicities


def test_intersection_node(node_curve):
    assert intersection_multiplicity(node_curve, [1], [2]) == 1


def test_intersection_tacnode(tacnode_curve):
    assert intersection_multiplicity(tacnode_curve, [1], [2]) == 2


def test_intersection_axes(axes_curve):
    assert intersection_multiplicity(axes_curve, [1], [2, 3]) == 1
    assert intersection_multiplicity(axes_curve, [2], [1, 3]) == 1


def test_intersection_guards(node_curve):
    with pytest.raises(CurveError):
        intersection_multiplicity(node_curve, [1], [1])
    with pytest.raises(CurveError):
        intersection_multiplicity(node_curve, [], [2])


# ---------------------------------------------------------------------------
# invariants report


def test_report_node(node_curve):
    rep = curve_invariants_report(node_curve, (4, 4))
    assert rep["delta"] == 1
    assert rep["gorenstein"]["symmetric"] and rep["gorenstein"]["length_test"]
    assert rep["conductor_formula"]["holds"]
    assert rep["intersections"] == {"1": 1, "2": 1}
    assert rep["partition_identity"]["equal"]


def test_report_tacnode(tacnode_curve):
    rep = curve_invariants_report(tacnode_curve, (6, 6))
    assert rep["delta"] == 2
    assert rep["conductor_formula"]["holds"]
    per = {row["label"]: row for row in rep["conductor_formula"]["per_branch"]}
    assert per[1]["intersection"] == 2 and per[1]["delta"] == 0
    assert per[1]["conductor"] == 2


def test_report_axes_flags_non_gorenstein(axes_curve):
    rep = curve_invariants_report(axes_curve, (3, 3, 3))
    assert rep["delta"] == 2
    assert not rep["gorenstein"]["symmetric"]
    assert not rep["gorenstein"]["length_test"]
    ident = rep["partition_identity"]
    assert ident["rhs"] == "3/2" and ident["lhs"] == "2"
    assert not ident["equal"]


def test_report_cusp(cusp_curve):
    rep = curve_invariants_report(cusp_curve, (8,))
    assert rep["delta"] == 1
    assert rep["semigroup"]["conductor"] == [2]  # degree 2 = 2*delta
    assert rep["gorenstein"]["symmetric"]


def test_curve_from_dict_list_and_dict_ideals():
    data = {
        "variables": ["x", "y"],
        "truncation": 10,
        "branches": [{"x": "t", "y": "0"}, {"x": "0", "y": "t"}],
        "ideals": {
            "m": ["x", "y"],
            "frac": {"generators": ["x", "y"], "denominator": "x+y"},
        },
    }
    curve = curve_from_dict(data)
    assert curve.ideal("m").generators == ("x", "y")
    assert curve.ideal("frac").denominator == "x+y"
