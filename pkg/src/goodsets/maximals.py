"""Maximal points of good sets, their classification, and the p/q numbers.

A member a of E is maximal when its fiber F(E, a) is empty, i.e. no member
agrees with a in one coordinate and is strictly larger in the rest.  For
r = 1 the convention is that the maximals are the gaps of E.  Relative
maximals have F_J(E, a) nonempty for every J with at least two elements;
absolute maximals have F_J(E, a) empty for every proper J.  The relative
maximals generate E: together with the (r-1)-fold projections they decide
membership pointwise.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from . import points as pt
from .core import (
    GoodSet,
    contains,
    fiber_is_empty,
    full_fiber_is_empty,
    validate_good_set,
)
from .errors import SubsetLimitError
from .points import Point

DEFAULT_MAX_R = 12


def max_r_cap() -> int:
    return int(os.environ.get("GOODSET_MAX_R", DEFAULT_MAX_R))


def _require_within_cap(r: int) -> None:
    cap = max_r_cap()
    if r > cap:
        raise SubsetLimitError(
            f"r={r} exceeds the subset-enumeration cap {cap} "
            "(set GOODSET_MAX_R to raise it)"
        )


@dataclass(frozen=True)
class MaximalClassification:
    point: Point
    is_maximal: bool
    is_relative: bool
    is_absolute: bool
    p: int
    q: int


def gaps(E: GoodSet) -> List[Point]:
    """Non-members of E between min and conductor (all of them lie there)."""
    out = []
    hi = tuple(x - 1 for x in E.conductor)
    if not pt.leq(E.min, hi):
        return out
    for cand in pt.box(E.min, hi):
        if not contains(E, cand):
            out.append(cand)
    return out


def p_value(E: GoodSet, alpha: Point) -> int:
    """Largest n such that F_A(E, alpha) is empty for all A with #A <= n."""
    _require_within_cap(E.r)
    p = 0
    for size in range(1, E.r + 1):
        if all(
            fiber_is_empty(E, alpha, A)
            for A in combinations(E.labels, size)
        ):
            p = size
        else:
            break
    return p


def q_value(E: GoodSet, alpha: Point) -> int:
    """Smallest n such that F_A(E, alpha) is nonempty for all A with #A >= n."""
    _require_within_cap(E.r)
    q = E.r + 1
    for size in range(E.r, 0, -1):
        if all(
            not fiber_is_empty(E, alpha, A)
            for A in combinations(E.labels, size)
        ):
            q = size
        else:
            break
    return q


def is_maximal(E: GoodSet, alpha: Point) -> bool:
    if E.r == 1:
        return (
            not contains(E, alpha)
            and E.min[0] <= alpha[0] < E.conductor[0]
        )
    return contains(E, alpha) and full_fiber_is_empty(E, alpha)


def _classify(E: GoodSet, alpha: Point) -> MaximalClassification:
    r = E.r
    if r == 1:
        return MaximalClassification(
            point=alpha,
            is_maximal=True,
            is_relative=True,
            is_absolute=True,
            p=p_value(E, alpha),
            q=q_value(E, alpha),
        )
    relative = True
    absolute = True
    for size in range(2, r + 1):
        for A in combinations(E.labels, size):
            empty = fiber_is_empty(E, alpha, A)
            if empty and size >= 2:
                relative = False
            if not empty and size < r:
                absolute = False
    return MaximalClassification(
        point=alpha,
        is_maximal=True,
        is_relative=relative,
        is_absolute=absolute,
        p=p_value(E, alpha),
        q=q_value(E, alpha),
    )


def maximal_points(E: GoodSet) -> List[MaximalClassification]:
    """All maximal points of E, classified, sorted by point.

    The scan region is the half-open box [m, c): minima force maximals
    below the conductor.  For r = 1 the maximals are the gaps.
    """
    _require_within_cap(E.r)
    hi = tuple(x - 1 for x in E.conductor)
    if not pt.leq(E.min, hi):
        return []
    out = []
    for cand in pt.box(E.min, hi):
        if E.r == 1:
            if not contains(E, cand):
                out.append(_classify(E, cand))
        elif contains(E, cand) and full_fiber_is_empty(E, cand):
            out.append(_classify(E, cand))
    return out


def relative_maximals(E: GoodSet) -> List[Point]:
    return [mc.point for mc in maximal_points(E) if mc.is_relative]


def absolute_maximals(E: GoodSet) -> List[Point]:
    return [mc.point for mc in maximal_points(E) if mc.is_absolute]


def in_integer_fiber(beta: Point, alpha: Point) -> bool:
    """beta in F(Z^r, alpha): one coordinate equal, the rest strictly larger."""
    if len(beta) != len(alpha):
        raise ValueError("dimension mismatch")
    for i in range(len(alpha)):
        if beta[i] == alpha[i] and all(
            beta[j] > alpha[j] for j in range(len(alpha)) if j != i
        ):
            return True
    return False


def generate_from_relative_maximals(
    projections: Sequence[GoodSet],
    rm: Iterable[Point],
    box: Tuple[Point, Point],
    labels: Optional[Sequence[int]] = None,
) -> GoodSet:
    """Reconstruct E ∩ box from its (r-1)-fold projections and RM(E).

    alpha belongs to E iff every (r-1)-projection of alpha lands in the
    matching projection set and alpha avoids F(Z^r, b) for every relative
    maximal b.  The reconstruction is validated before being returned.
    """
    lo, hi = box
    r = len(lo)
    if labels is None:
        if projections:
            all_labels: Set[int] = set()
            for P in projections:
                all_labels.update(P.labels)
            label_tuple = tuple(sorted(all_labels))
        else:
            label_tuple = tuple(range(1, r + 1))
    else:
        label_tuple = tuple(labels)
    if len(label_tuple) != r:
        raise ValueError("labels inconsistent with box dimension")
    if r >= 2 and len(projections) != r:
        raise ValueError(f"expected {r} projections of size r-1, got {len(projections)}")
    proj_positions = []
    for P in projections:
        if len(P.labels) != r - 1 or not set(P.labels) <= set(label_tuple):
            raise ValueError(f"projection labels {P.labels} do not fit {label_tuple}")
        proj_positions.append([label_tuple.index(lab) for lab in P.labels])

    rm = sorted(set(rm))
    pts = []
    for cand in pt.box(lo, hi):
        ok = all(
            contains(P, tuple(cand[k] for k in positions))
            for P, positions in zip(projections, proj_positions)
        )
        if ok and not any(in_integer_fiber(cand, b) for b in rm):
            pts.append(cand)
    return validate_good_set(r, pts, labels=label_tuple)


def frobenius_fiber_check(S: GoodSet) -> bool:
    """The fiber of the Frobenius vector in S is empty (always, for a
    validated good set: a member of it would meet down to c - e_i)."""
    f = pt.sub(S.conductor, pt.ones(S.r))
    return full_fiber_is_empty(S, f)
