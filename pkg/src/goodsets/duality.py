"""Symmetry of value semigroups and duality between value sets.

A semigroup S is symmetric when membership of a is equivalent to emptiness
of the fiber of f(S) - a; this happens exactly for Gorenstein rings.  The
dual transform sends a value set E to {b : F(E, f(S) - b) empty}; for
Gorenstein rings it produces the value set of the dual ideal.  Two further
Gorenstein signatures are checked here: the elementary lengths of E at a
and of Estar at c(S) - a - e_i sum to 1 for all a and i, and
p(E, a) + q(Estar, f(S) - a) equals r + 1 everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import points as pt
from .colength import colength, ell_step
from .core import (
    GoodSet,
    algebra_check,
    contains,
    frobenius,
    full_fiber_is_empty,
    subset_of,
    validate_good_set,
)
from .errors import GoodSetError, NotGorensteinError, NotSemigroupError
from .maximals import (
    absolute_maximals,
    is_maximal,
    maximal_points,
    p_value,
    q_value,
    relative_maximals,
)
from .points import Point


def symmetry_check(S: GoodSet) -> Tuple[bool, List[Tuple[Point, str]]]:
    """Evaluate: a in S iff the fiber of f(S) - a in S is empty, for all
    a in [0, c(S)] (clamping makes that box exhaustive).

    Returns the verdict and every failing point, each tagged with the
    implication that broke ('member_with_nonempty_fiber' or
    'empty_fiber_for_nonmember').
    """
    if not algebra_check(S, "semigroup"):
        raise NotSemigroupError("symmetry is defined for value semigroups only")
    f = frobenius(S)
    witnesses: List[Tuple[Point, str]] = []
    for alpha in pt.box(pt.zeros(S.r), S.conductor):
        member = contains(S, alpha)
        empty = full_fiber_is_empty(S, pt.sub(f, alpha))
        if member and not empty:
            witnesses.append((alpha, "member_with_nonempty_fiber"))
        elif empty and not member:
            witnesses.append((alpha, "empty_fiber_for_nonmember"))
    return (not witnesses), witnesses


def dual_transform(E: GoodSet, S: GoodSet) -> GoodSet:
    """The set {b : F(E, f(S) - b) empty}, packaged as a good set.

    Outside the box [c(S) - c(E), c(S) - m_E] membership is forced (below
    it some coordinate of f(S) - b reaches the conductor region of E and
    the fiber is nonempty; above it the fiber is vacuously empty), so the
    box window determines the transform.  When S is symmetric this is the
    value set of the dual ideal.  Validation failures are surfaced.
    """
    if E.r != S.r:
        raise GoodSetError("E and S must have the same number of branches")
    f = frobenius(S)
    lo = pt.sub(S.conductor, E.conductor)
    hi = pt.sub(S.conductor, E.min)
    pts = [
        beta
        for beta in pt.box(lo, hi)
        if full_fiber_is_empty(E, pt.sub(f, beta))
    ]
    return validate_good_set(E.r, pts, labels=E.labels)


def sum_containment_check(E: GoodSet, Estar: GoodSet, S: GoodSet) -> bool:
    """E + Estar ⊆ S, decided on windows (clamps extend the verdict)."""
    if not (E.r == Estar.r == S.r):
        raise GoodSetError("dimension mismatch")
    for a in E.small_sorted:
        for b in Estar.small_sorted:
            if not contains(S, pt.add(a, b)):
                return False
    return True


def _default_box(E: GoodSet, S: GoodSet) -> Tuple[Point, Point]:
    lo = pt.sub(pt.meet(E.min, pt.zeros(E.r)), pt.ones(E.r))
    hi = pt.add(pt.join(S.conductor, E.conductor), pt.ones(E.r))
    return lo, hi


@dataclass(frozen=True)
class LocalDualityReport:
    all_sums_le_one: bool
    all_sums_equal_one: bool
    over_witness: Optional[Tuple[Point, int]]
    zero_witness: Optional[Tuple[Point, int]]

    def to_dict(self) -> dict:
        def w(x):
            return None if x is None else {"alpha": list(x[0]), "i": x[1]}

        return {
            "all_sums_le_one": self.all_sums_le_one,
            "all_sums_equal_one": self.all_sums_equal_one,
            "over_witness": w(self.over_witness),
            "zero_witness": w(self.zero_witness),
        }


def local_duality_check(
    E: GoodSet,
    Estar: GoodSet,
    S: GoodSet,
    box: Optional[Tuple[Point, Point]] = None,
) -> LocalDualityReport:
    """Scan ell_E(a, e_i) + ell_Estar(c(S) - a - e_i, e_i) over a box.

    The sum is at most 1 for a genuine dual pair (and for the transform);
    it equals 1 everywhere exactly in the Gorenstein case.
    """
    lo, hi = box if box is not None else _default_box(E, S)
    over = None
    zero = None
    for alpha in pt.box(lo, hi):
        for k, lab in enumerate(E.labels):
            a = ell_step(E, alpha, lab)
            mirrored = tuple(
                S.conductor[j] - alpha[j] - (1 if j == k else 0) for j in range(E.r)
            )
            b = ell_step(Estar, mirrored, Estar.labels[k])
            s = a + b
            if s > 1 and over is None:
                over = (alpha, lab)
            if s == 0 and zero is None:
                zero = (alpha, lab)
    return LocalDualityReport(
        all_sums_le_one=over is None,
        all_sums_equal_one=over is None and zero is None,
        over_witness=over,
        zero_witness=zero,
    )


@dataclass(frozen=True)
class PQDualityReport:
    inequality_holds: bool
    equality_everywhere: bool
    mirrored_inequality_holds: bool
    mirrored_equality_everywhere: bool
    inequality_witness: Optional[Point]
    equality_witness: Optional[Point]

    def to_dict(self) -> dict:
        return {
            "inequality_holds": self.inequality_holds,
            "equality_everywhere": self.equality_everywhere,
            "mirrored_inequality_holds": self.mirrored_inequality_holds,
            "mirrored_equality_everywhere": self.mirrored_equality_everywhere,
            "inequality_witness": None
            if self.inequality_witness is None
            else list(self.inequality_witness),
            "equality_witness": None
            if self.equality_witness is None
            else list(self.equality_witness),
        }


def pq_duality_check(
    E: GoodSet,
    Estar: GoodSet,
    S: GoodSet,
    box: Optional[Tuple[Point, Point]] = None,
) -> PQDualityReport:
    """Assert p(E, a) + q(Estar, f(S) - a) >= r + 1 on a box; record whether
    equality holds everywhere, and the same for the mirrored inequality."""
    lo, hi = box if box is not None else _default_box(E, S)
    f = frobenius(S)
    r = E.r
    ineq = True
    eq = True
    mineq = True
    meq = True
    ineq_w = None
    eq_w = None
    for alpha in pt.box(lo, hi):
        s = p_value(E, alpha) + q_value(Estar, pt.sub(f, alpha))
        if s < r + 1:
            if ineq:
                ineq_w = alpha
            ineq = False
        if s != r + 1:
            if eq:
                eq_w = alpha
            eq = False
        s2 = p_value(Estar, alpha) + q_value(E, pt.sub(f, alpha))
        if s2 < r + 1:
            mineq = False
        if s2 != r + 1:
            meq = False
    return PQDualityReport(
        inequality_holds=ineq,
        equality_everywhere=eq,
        mirrored_inequality_holds=mineq,
        mirrored_equality_everywhere=meq,
        inequality_witness=ineq_w,
        equality_witness=eq_w,
    )


@dataclass(frozen=True)
class MaximalSymmetryReport:
    passed: bool
    pairs: List[Tuple[Point, Point]]
    failure: Optional[Tuple[Point, str]]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "pairs": [[list(a), list(b)] for a, b in self.pairs],
            "failure": None
            if self.failure is None
            else {"point": list(self.failure[0]), "reason": self.failure[1]},
        }


def maximal_symmetry_check(E: GoodSet, Estar: GoodSet, S: GoodSet) -> MaximalSymmetryReport:
    """On a symmetric semigroup: b in Estar is maximal iff f(S) - b in E,
    and reflection through f(S) matches AM(E) with RM(Estar).

    Raises when S is not symmetric.  Returns the reflection pairs
    (absolute maximal of E, relative maximal of Estar).
    """
    symmetric, _ = symmetry_check(S)
    if not symmetric:
        raise NotGorensteinError("maximal symmetry needs a symmetric semigroup")
    f = frobenius(S)
    lo = pt.sub(Estar.min, pt.ones(Estar.r))
    hi = pt.add(Estar.conductor, pt.ones(Estar.r))
    for beta in pt.box(lo, hi):
        if not contains(Estar, beta):
            continue
        # the fiber characterization of maximality; for r = 1 no member is
        # maximal in this sense and the reflection is a non-member, matching
        maximal = full_fiber_is_empty(Estar, beta)
        reflected = contains(E, pt.sub(f, beta))
        if maximal != reflected:
            return MaximalSymmetryReport(
                False, [], (beta, "maximal" if maximal else "reflected_member")
            )
    if E.r == 1:
        return MaximalSymmetryReport(True, [], None)
    am = absolute_maximals(E)
    rm_star = set(relative_maximals(Estar))
    pairs = []
    for alpha in am:
        beta = pt.sub(f, alpha)
        if beta not in rm_star:
            return MaximalSymmetryReport(False, [], (alpha, "am_without_rm_partner"))
        pairs.append((alpha, beta))
    if len(pairs) != len(rm_star):
        extra = sorted(rm_star - {b for _, b in pairs})[0]
        return MaximalSymmetryReport(False, [], (extra, "rm_without_am_partner"))
    return MaximalSymmetryReport(True, sorted(pairs), None)


def bidual_colength_check(
    E_I: GoodSet, E_J: GoodSet, Estar_I: GoodSet, Estar_J: GoodSet
) -> bool:
    """Length of J/I equals length of Istar/Jstar (the Gorenstein
    signature for nested ideals), computed from the four value sets."""
    if not subset_of(E_I, E_J):
        raise GoodSetError("E_I must be contained in E_J")
    if not subset_of(Estar_J, Estar_I):
        raise GoodSetError("Estar_J must be contained in Estar_I")
    return colength(E_J, E_I) == colength(Estar_I, Estar_J)
