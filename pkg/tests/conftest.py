from __future__ import annotations

import json

import pytest

from goodsets.core import validate_good_set, orthant
from goodsets.curve import CurveRing, IdealSpec


# the four reference singularities: cusp, node, coordinate axes, tacnode


@pytest.fixture(scope="session")
def s_a():
    return validate_good_set(1, [(0,), (2,)])


@pytest.fixture(scope="session")
def s_b():
    return validate_good_set(2, [(0, 0), (1, 1)])


@pytest.fixture(scope="session")
def s_c():
    return validate_good_set(3, [(0, 0, 0), (1, 1, 1)])


@pytest.fixture(scope="session")
def s_d():
    return validate_good_set(2, [(0, 0), (1, 1), (2, 2)])


@pytest.fixture(scope="session")
def e_m():
    # value set of the maximal ideal of the node
    return validate_good_set(2, [(1, 1)])


@pytest.fixture(scope="session")
def nn2():
    return orthant(2)


@pytest.fixture(scope="session")
def nn3():
    return orthant(3)


@pytest.fixture(scope="session")
def cusp_curve():
    return CurveRing(["x", "y"], [{"x": "t^2", "y": "t^3"}], truncation=12)


@pytest.fixture(scope="session")
def node_curve():
    return CurveRing(
        ["x", "y"],
        [{"x": "t", "y": "0"}, {"x": "0", "y": "t"}],
        truncation=12,
        ideals={"m": IdealSpec("m", ("x", "y"))},
    )


@pytest.fixture(scope="session")
def axes_curve():
    return CurveRing(
        ["x", "y", "z"],
        [
            {"x": "t", "y": "0", "z": "0"},
            {"x": "0", "y": "t", "z": "0"},
            {"x": "0", "y": "0", "z": "t"},
        ],
        truncation=12,
        ideals={"m": IdealSpec("m", ("x", "y", "z"))},
    )


@pytest.fixture(scope="session")
def tacnode_curve():
    return CurveRing(
        ["x", "y"],
        [{"x": "t", "y": "t^2"}, {"x": "t", "y": "0"}],
        truncation=16,
        ideals={"m": IdealSpec("m", ("x", "y"))},
    )


@pytest.fixture()
def goodset_file(tmp_path):
    def write(E_or_dict, name="set.json"):
        if not isinstance(E_or_dict, dict):
            from goodsets.core import goodset_to_dict

            E_or_dict = goodset_to_dict(E_or_dict)
        path = tmp_path / name
        path.write_text(json.dumps(E_or_dict), encoding="utf-8")
        return str(path)

    return write


@pytest.fixture()
def curve_file(tmp_path):
    def write(data, name="curve.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return write


NODE_CURVE_DICT = {
    "variables": ["x", "y"],
    "truncation": 12,
    "branches": [{"x": "t", "y": "0"}, {"x": "0", "y": "t"}],
    "ideals": {"m": ["x", "y"]},
}
