"""Combinatorial invariants of value sets of fractional ideals of
algebroid curves: good sets over Z^r, maximal points, Apery sets,
Gorenstein symmetry and duality, colengths, and a truncated power-series
curve engine producing value sets from branch parametrizations."""

from .core import (
    GoodSet,
    algebra_check,
    contains,
    dump_goodset,
    fiber,
    frobenius,
    goodset_from_dict,
    goodset_to_dict,
    load_goodset,
    meet,
    normalize_conductor,
    orthant,
    project,
    validate_good_set,
)
from .maximals import (
    MaximalClassification,
    generate_from_relative_maximals,
    maximal_points,
    p_value,
    q_value,
)
from .apery import apery_membership, apery_symmetry_check, apery_window, gap_decomposition
from .colength import (
    colength,
    colength_r2_formula,
    colength_recursive_formula,
    delta_invariant,
    ell_step,
    ell_truncation,
    gorenstein_length_test,
)
from .duality import (
    bidual_colength_check,
    dual_transform,
    local_duality_check,
    maximal_symmetry_check,
    pq_duality_check,
    sum_containment_check,
    symmetry_check,
)

__version__ = "0.1.0"

__all__ = [
    "GoodSet",
    "MaximalClassification",
    "algebra_check",
    "apery_membership",
    "apery_symmetry_check",
    "apery_window",
    "bidual_colength_check",
    "colength",
    "colength_r2_formula",
    "colength_recursive_formula",
    "contains",
    "delta_invariant",
    "dual_transform",
    "dump_goodset",
    "ell_step",
    "ell_truncation",
    "fiber",
    "frobenius",
    "gap_decomposition",
    "generate_from_relative_maximals",
    "goodset_from_dict",
    "goodset_to_dict",
    "gorenstein_length_test",
    "load_goodset",
    "local_duality_check",
    "maximal_points",
    "maximal_symmetry_check",
    "meet",
    "normalize_conductor",
    "orthant",
    "p_value",
    "pq_duality_check",
    "project",
    "q_value",
    "sum_containment_check",
    "symmetry_check",
    "validate_good_set",
]
