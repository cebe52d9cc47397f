"""Finite canonical representation of value sets in Z^r ("good sets").

A good set E is an infinite subset of Z^r with a minimum m, a conductor c
(the least point with c + N^r contained in E), closure under componentwise
minima (property A), and cancellation witnesses (property B):

    whenever a != b in E share coordinate i, some g in E has g_i > a_i and
    g_j >= min(a_j, b_j) for j != i, with equality where a_j != b_j.

Such a set is completely determined by its finite window E ∩ [m, c]: a point
b belongs to E iff b >= m and meet(b, c) lies in the window (the "clamp"
rule).  ``GoodSet`` stores exactly that data; ``validate_good_set`` checks
that a finite point set really is such a window.  Window checks suffice:

* meets of clamps are clamps of meets, so property A on the window gives
  property A everywhere;
* a property-B witness for a window pair reduces into [m, c + e] by meeting
  with c + e, and witnesses for out-of-window pairs can be manufactured by
  raising coordinates that already sit at or above the conductor (raising a
  coordinate of a member from conductor level stays inside E);
* c - e_i lies in E iff c - e_i is itself a conductor point, so minimality
  of the conductor is exactly "c - e_i not in the window for every i".
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from . import points as pt
from .errors import (
    ConductorNotInSetError,
    ConductorNotMinimalError,
    DimensionMismatchError,
    EmptyInputError,
    MeetClosureError,
    PropertyBError,
    ValidationError,
)
from .points import Point


@dataclass(frozen=True)
class GoodSet:
    """Canonical finite representation of a good set in Z^r.

    ``labels`` are the original branch indices (1-based); they survive
    projections, so a projection of a 3-branch set onto branches {1, 3}
    has labels (1, 3) and r = 2.
    """

    r: int
    labels: Tuple[int, ...]
    min: Point
    conductor: Point
    small: FrozenSet[Point]

    @property
    def small_sorted(self) -> List[Point]:
        return sorted(self.small)

    def position(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"label {label} not among {self.labels}") from None

    def __contains__(self, beta: Point) -> bool:
        return contains(self, beta)

    def __repr__(self) -> str:  # compact, deterministic
        pts = ",".join(str(p) for p in self.small_sorted)
        return f"GoodSet(r={self.r}, labels={self.labels}, small=[{pts}])"


def meet(a: Point, b: Point) -> Point:
    """Componentwise minimum (property A operation)."""
    return pt.meet(a, b)


def contains(E: GoodSet, beta: Point) -> bool:
    """Membership via the clamp rule: beta >= min and meet(beta, c) in window."""
    if len(beta) != E.r:
        raise DimensionMismatchError(f"point {beta} has wrong dimension for r={E.r}")
    if not pt.leq(E.min, beta):
        return False
    return pt.meet(beta, E.conductor) in E.small


def _window_member(points_set: frozenset, m: Point, c: Point, beta: Point) -> bool:
    # clamp membership against a candidate window, before a GoodSet exists
    if not pt.leq(m, beta):
        return False
    return pt.meet(beta, c) in points_set


def validate_good_set(
    r: int,
    points: Iterable[Point],
    labels: Optional[Sequence[int]] = None,
) -> GoodSet:
    """Check that ``points`` is the window E ∩ [m, c] of a good set.

    The minimum is the meet of all points and the conductor their join.
    Raises a ``ValidationError`` subclass naming the violated axiom:
    meet-closure (A), a missing cancellation witness (B, searched in
    [m, c + e] with clamp membership), the join missing from the set, or a
    non-minimal conductor.
    """
    pts_list = sorted({tuple(int(x) for x in p) for p in points})
    if not pts_list:
        raise EmptyInputError("no points given")
    if any(len(p) != r for p in pts_list):
        raise DimensionMismatchError(f"all points must have dimension {r}")
    if r < 1:
        raise DimensionMismatchError("r must be >= 1")
    label_tuple = tuple(labels) if labels is not None else tuple(range(1, r + 1))
    if len(label_tuple) != r:
        raise DimensionMismatchError("labels must have length r")

    m = pt.meet_all(pts_list)
    c = pt.join_all(pts_list)
    points_set = frozenset(pts_list)

    if c not in points_set:
        raise ConductorNotInSetError(c)

    for i, a in enumerate(pts_list):
        for b in pts_list[i + 1 :]:
            if pt.meet(a, b) not in points_set:
                raise MeetClosureError(a, b)

    ce = pt.add(c, pt.ones(r))
    for i, a in enumerate(pts_list):
        for b in pts_list[i + 1 :]:
            for k in range(r):
                if a[k] != b[k]:
                    continue
                if not _property_b_witness_exists(points_set, m, c, ce, a, b, k):
                    raise PropertyBError(a, b, label_tuple[k])

    for k in range(r):
        low = tuple(c[j] - (1 if j == k else 0) for j in range(r))
        if low in points_set:
            raise ConductorNotMinimalError(label_tuple[k], c)

    return GoodSet(r=r, labels=label_tuple, min=m, conductor=c, small=points_set)


def _property_b_witness_exists(points_set, m, c, ce, a, b, k) -> bool:
    r = len(a)
    # coordinates where a and b differ are pinned to the minimum; tied
    # coordinates (other than k) range up to c + 1, as does coordinate k
    ranges = []
    for j in range(r):
        if j == k:
            ranges.append(range(a[k] + 1, ce[k] + 1))
        elif a[j] != b[j]:
            ranges.append(range(min(a[j], b[j]), min(a[j], b[j]) + 1))
        else:
            ranges.append(range(a[j], ce[j] + 1))
    for cand in product(*ranges):
        if _window_member(points_set, m, c, cand):
            return True
    return False


def normalize_conductor(E: GoodSet) -> GoodSet:
    """Shrink a non-minimal conductor to the least conductor point.

    The represented set is unchanged; only the canonical window shrinks.
    Useful as the explicit repair path after ``ConductorNotMinimalError``.
    """
    c = E.conductor
    while True:
        for k in range(E.r):
            cand = tuple(c[j] - (1 if j == k else 0) for j in range(E.r))
            if pt.leq(E.min, cand) and pt.meet(cand, E.conductor) in E.small:
                c = cand
                break
        else:
            break
    small = frozenset(p for p in E.small if pt.leq(p, c))
    return validate_good_set(E.r, small, labels=E.labels)


# ---------------------------------------------------------------------------
# fibers


def _fiber_box_top(E: GoodSet, alpha: Point) -> Point:
    return pt.add(pt.join(alpha, E.conductor), pt.ones(E.r))


def fiber(
    E: GoodSet,
    alpha: Point,
    J: Iterable[int],
    closed: bool = False,
    hi: Optional[Point] = None,
) -> List[Point]:
    """Members of F_J(E, alpha) (or the closed variant) up to ``hi``.

    F_J pins coordinates in J to alpha and requires the rest to be strictly
    larger (weakly larger for the closed variant).  The default box top
    join(alpha, c) + e is enough to decide emptiness: meeting any member of
    the fiber with that top stays in E and preserves the constraints.
    """
    positions = _positions(E, J)
    if hi is None:
        hi = _fiber_box_top(E, alpha)
    ranges = []
    for k in range(E.r):
        if k in positions:
            if alpha[k] > hi[k] or alpha[k] < E.min[k]:
                return []
            ranges.append(range(alpha[k], alpha[k] + 1))
        else:
            lo_k = max(alpha[k] + (0 if closed else 1), E.min[k])
            if lo_k > hi[k]:
                return []
            ranges.append(range(lo_k, hi[k] + 1))
    out = [cand for cand in product(*ranges) if contains(E, cand)]
    out.sort()
    return out


def fiber_is_empty(E: GoodSet, alpha: Point, J: Iterable[int], closed: bool = False) -> bool:
    """Emptiness of F_J(E, alpha) / closed variant, with early exit."""
    return _fiber_empty_cached(E, alpha, frozenset(_positions(E, J)), closed)


@lru_cache(maxsize=None)
def _fiber_empty_cached(E: GoodSet, alpha: Point, positions: frozenset, closed: bool) -> bool:
    hi = _fiber_box_top(E, alpha)
    ranges = []
    for k in range(E.r):
        if k in positions:
            if alpha[k] > hi[k] or alpha[k] < E.min[k]:
                return True
            ranges.append(range(alpha[k], alpha[k] + 1))
        else:
            lo_k = max(alpha[k] + (0 if closed else 1), E.min[k])
            if lo_k > hi[k]:
                return True
            ranges.append(range(lo_k, hi[k] + 1))
    for cand in product(*ranges):
        if contains(E, cand):
            return False
    return True


def full_fiber_is_empty(E: GoodSet, alpha: Point) -> bool:
    """Emptiness of the fiber F(E, alpha) = union of the F_{i}(E, alpha)."""
    return all(fiber_is_empty(E, alpha, (lab,)) for lab in E.labels)


def full_fiber(E: GoodSet, alpha: Point, hi: Optional[Point] = None) -> List[Point]:
    out = set()
    for lab in E.labels:
        out.update(fiber(E, alpha, (lab,), closed=False, hi=hi))
    return sorted(out)


def _positions(E: GoodSet, J: Iterable[int]) -> List[int]:
    J = tuple(J)
    if not J:
        raise KeyError("J must be a nonempty set of labels")
    return [E.position(lab) for lab in J]


# ---------------------------------------------------------------------------
# projections


def project(E: GoodSet, J: Sequence[int]) -> GoodSet:
    """The projection of E onto the branches in J, as a good set.

    The conductor of the projection is recomputed; it may sit strictly
    below the projection of c(E).  Labels are preserved, so projections
    compose: project(project(E, J), K) == project(E, K) for K ⊆ J.
    """
    J = tuple(sorted(set(J), key=lambda lab: E.position(lab)))
    positions = [E.position(lab) for lab in J]
    if J == E.labels:
        return E

    # window of the projection: project E ∩ [m, top], where top keeps
    # J-coordinates at the conductor and allows one step above it elsewhere
    top = tuple(
        E.conductor[k] if k in positions else E.conductor[k] + 1 for k in range(E.r)
    )
    window = set()
    for cand in pt.box(E.min, top):
        if contains(E, cand):
            window.add(tuple(cand[k] for k in positions))

    m_j = tuple(E.min[k] for k in positions)
    cond = tuple(E.conductor[k] for k in positions)
    rj = len(J)
    # descend to the least conductor point: c - e_i is a conductor point
    # of a good set iff it is a member
    while True:
        for k in range(rj):
            cand = tuple(cond[j] - (1 if j == k else 0) for j in range(rj))
            if pt.leq(m_j, cand) and cand in window:
                cond = cand
                break
        else:
            break
    small = {p for p in window if pt.leq(p, cond)}
    return validate_good_set(rj, small, labels=J)


@lru_cache(maxsize=None)
def _project_cached(E: GoodSet, J: Tuple[int, ...]) -> GoodSet:
    return project(E, J)


def project_cached(E: GoodSet, J: Sequence[int]) -> GoodSet:
    return _project_cached(E, tuple(sorted(set(J), key=lambda lab: E.position(lab))))


# ---------------------------------------------------------------------------
# frobenius / algebra structure


def frobenius(S: GoodSet) -> Point:
    """The Frobenius vector c(S) - (1, ..., 1)."""
    return pt.sub(S.conductor, pt.ones(S.r))


def algebra_check(E: GoodSet, mode: str, S: Optional[GoodSet] = None) -> bool:
    """Check the additive structure of the represented set.

    ``mode='semigroup'``: 0 in E and E + E ⊆ E.  ``mode='monomodule'``:
    S + E ⊆ E for the given semigroup S.  Both are decided on windows;
    the clamp rule extends window sums to arbitrary ones provided the
    conductor of E sits below m_E + c(S), which is checked explicitly.
    """
    if mode == "semigroup":
        z = pt.zeros(E.r)
        if not contains(E, z):
            return False
        if any(x < 0 for p in E.small for x in p):
            return False
        pts_sorted = E.small_sorted
        return all(
            contains(E, pt.add(a, b)) for a in pts_sorted for b in pts_sorted
        )
    if mode == "monomodule":
        if S is None:
            raise ValueError("monomodule mode requires the semigroup S")
        if S.r != E.r:
            raise DimensionMismatchError("S and E must have equal dimension")
        for s in S.small_sorted:
            for e in E.small_sorted:
                if not contains(E, pt.add(s, e)):
                    return False
        # m_E + c(S) must be a conductor point of E, else window sums do
        # not control sums with large S-elements
        corner = pt.add(E.min, S.conductor)
        top = pt.join(corner, E.conductor)
        return all(contains(E, q) for q in pt.box(corner, top))
    raise ValueError(f"unknown mode {mode!r}")


def subset_of(D: GoodSet, E: GoodSet) -> bool:
    """Containment of represented sets, decided on a finite box."""
    if D.r != E.r:
        raise DimensionMismatchError("dimension mismatch")
    hi = pt.join(D.conductor, E.conductor)
    for cand in pt.box(D.min, hi):
        if contains(D, cand) and not contains(E, cand):
            return False
    return True


def members_in_box(E: GoodSet, lo: Point, hi: Point) -> List[Point]:
    return [p for p in pt.box(lo, hi) if contains(E, p)]


def orthant(r: int, labels: Optional[Sequence[int]] = None) -> GoodSet:
    """N^r as a good set: min = conductor = 0 (the value set of the
    normalization)."""
    z = pt.zeros(r)
    label_tuple = tuple(labels) if labels is not None else tuple(range(1, r + 1))
    return GoodSet(r=r, labels=label_tuple, min=z, conductor=z, small=frozenset([z]))


# ---------------------------------------------------------------------------
# JSON file format


def goodset_to_dict(E: GoodSet) -> dict:
    return {
        "r": E.r,
        "labels": list(E.labels),
        "min": list(E.min),
        "conductor": list(E.conductor),
        "points": [list(p) for p in E.small_sorted],
    }


def goodset_from_dict(data: dict) -> GoodSet:
    """Load and re-validate a good set from its JSON dict form."""
    r = int(data["r"])
    pts_in = [tuple(int(x) for x in p) for p in data["points"]]
    labels = [int(x) for x in data["labels"]] if "labels" in data else None
    E = validate_good_set(r, pts_in, labels=labels)
    for key in ("min", "conductor"):
        if key in data:
            declared = tuple(int(x) for x in data[key])
            actual = E.min if key == "min" else E.conductor
            if declared != actual:
                raise ValidationError(
                    f"declared {key} {declared} != computed {actual}"
                )
    return E


def load_goodset(path) -> GoodSet:
    with open(path, "r", encoding="utf-8") as fh:
        return goodset_from_dict(json.load(fh))


def dump_goodset(E: GoodSet, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(goodset_to_dict(E), fh, sort_keys=True, indent=2)
        fh.write("\n")
