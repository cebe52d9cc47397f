"""Apery sets of good sets and the symmetry checks built on them.

The Apery set of E with respect to a nonzero member a collects the members
b with b - a outside E.  For r >= 2 it is infinite, so it is exposed as a
membership predicate plus windowed enumerations.  Every non-member of a
semigroup S decomposes as (Apery element) - (positive multiple of a); on
symmetric semigroups the fibers of f(S) + a - (Apery element) land back in
the Apery set, and the analogous statement for an ideal and its dual
characterizes Gorenstein rings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import points as pt
from .core import GoodSet, contains, frobenius, full_fiber
from .errors import GoodSetError
from .points import Point


def _require_member(E: GoodSet, alpha: Point, role: str) -> None:
    if not contains(E, alpha):
        raise GoodSetError(f"{role} {alpha} is not a member")
    if all(x == 0 for x in alpha):
        raise GoodSetError(f"{role} must be nonzero")


def apery_membership(E: GoodSet, alpha: Point, beta: Point) -> bool:
    """beta in A_alpha(E): beta in E and beta - alpha not in E."""
    _require_member(E, alpha, "alpha")
    return contains(E, beta) and not contains(E, pt.sub(beta, alpha))


def apery_window(E: GoodSet, alpha: Point, hi: Point, lo: Optional[Point] = None) -> List[Point]:
    """Members of A_alpha(E) in the box [lo or min(E), hi]."""
    _require_member(E, alpha, "alpha")
    if lo is None:
        lo = E.min
    if not pt.leq(lo, hi):
        raise GoodSetError(f"window top {hi} is below {lo}")
    return [
        beta
        for beta in pt.box(lo, hi)
        if contains(E, beta) and not contains(E, pt.sub(beta, alpha))
    ]


def gap_decomposition(S: GoodSet, alpha: Point, beta: Point) -> Tuple[Point, int]:
    """Write a non-member beta as a - rho*alpha with a in A_alpha(S).

    rho is the least positive integer with beta + rho*alpha in S; since
    alpha has strictly positive coordinates the walk reaches the conductor.
    """
    _require_member(S, alpha, "alpha")
    if not all(x > 0 for x in alpha):
        raise GoodSetError(f"alpha {alpha} must be strictly positive")
    if contains(S, beta):
        raise GoodSetError(f"beta {beta} is a member, nothing to decompose")
    rho = 0
    a = beta
    while not contains(S, a):
        a = pt.add(a, alpha)
        rho += 1
    return a, rho


@dataclass(frozen=True)
class AperyCheckReport:
    passed: bool
    alpha: Point
    checked: int
    counterexample: Optional[Point]
    reason: Optional[str]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "alpha": list(self.alpha),
            "checked": self.checked,
            "counterexample": None
            if self.counterexample is None
            else list(self.counterexample),
            "reason": self.reason,
        }


def apery_symmetry_check(
    E: GoodSet,
    Estar: GoodSet,
    S: GoodSet,
    alpha: Point,
    window: Optional[Tuple[Point, Point]] = None,
) -> AperyCheckReport:
    """For every Apery element a of E in the window, the fiber of
    f(S) + alpha - a in Estar must be nonempty and contained in A_alpha(Estar).

    With E = Estar = S this is the semigroup form of the criterion; it holds
    iff S is symmetric.  alpha must belong to both E and Estar.
    """
    _require_member(E, alpha, "alpha")
    _require_member(Estar, alpha, "alpha")
    f = frobenius(S)
    if window is None:
        lo = E.min
        hi = pt.add(pt.add(S.conductor, alpha), pt.ones(E.r))
        hi = pt.join(hi, pt.add(E.conductor, alpha))
    else:
        lo, hi = window
    checked = 0
    for a in pt.box(lo, hi):
        if not (contains(E, a) and not contains(E, pt.sub(a, alpha))):
            continue
        checked += 1
        target = pt.add(pt.sub(f, a), alpha)
        # fiber box top large enough that clamping a fiber member cannot
        # change its Apery status
        top = pt.add(pt.add(pt.join(target, Estar.conductor), alpha), pt.ones(E.r))
        fib = full_fiber(Estar, target, hi=top)
        if not fib:
            return AperyCheckReport(False, alpha, checked, a, "empty_fiber")
        for theta in fib:
            if contains(Estar, pt.sub(theta, alpha)):
                return AperyCheckReport(False, alpha, checked, a, "fiber_escapes_apery")
    return AperyCheckReport(True, alpha, checked, None, None)
