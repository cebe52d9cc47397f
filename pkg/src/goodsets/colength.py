"""Colengths of fractional ideals computed from their value sets.

The length of I(a)/I(a + e_i) is 0 or 1 and equals 1 exactly when the
closed fiber of a in direction i is nonempty.  Summing these elementary
steps along any saturated chain from the minimum to g gives the length of
I/I(g); the value is independent of the chain.  Differencing two such
truncations at a common large g gives the colength of nested ideals.  For
r = 2 there is a closed formula in terms of maximal points, and for any r
a recursion over projections.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import List, Optional, Sequence, Set, Tuple

from . import points as pt
from .core import GoodSet, contains, fiber_is_empty, orthant, project_cached, subset_of
from .errors import GoodSetError
from .maximals import gaps, maximal_points, relative_maximals
from .points import Point


def ell_step(E: GoodSet, alpha: Point, i: int) -> int:
    """0/1 growth of the value filtration at alpha in direction of label i."""
    return 0 if fiber_is_empty(E, alpha, (i,), closed=True) else 1


def _canonical_chain(E: GoodSet, gamma: Point) -> List[Tuple[Point, int]]:
    # raise coordinate 1 from m to gamma, then coordinate 2, and so on
    steps = []
    cur = list(E.min)
    for k in range(E.r):
        while cur[k] < gamma[k]:
            steps.append((tuple(cur), k))
            cur[k] += 1
    return steps


def _random_chain(E: GoodSet, gamma: Point, rng: random.Random) -> List[Tuple[Point, int]]:
    steps = []
    cur = list(E.min)
    remaining = [gamma[k] - cur[k] for k in range(E.r)]
    while any(remaining):
        k = rng.choice([k for k in range(E.r) if remaining[k] > 0])
        steps.append((tuple(cur), k))
        cur[k] += 1
        remaining[k] -= 1
    return steps


def ell_truncation(
    E: GoodSet, gamma: Point, rng: Optional[random.Random] = None
) -> int:
    """Length of I/I(gamma), summed along a saturated chain from min(E).

    The canonical chain raises coordinates in label order; passing ``rng``
    instead walks a random saturated chain (the result is the same).
    """
    if len(gamma) != E.r:
        raise GoodSetError("gamma has wrong dimension")
    if not pt.leq(E.min, gamma):
        raise GoodSetError(f"gamma {gamma} is not >= min {E.min}")
    chain = (
        _canonical_chain(E, gamma) if rng is None else _random_chain(E, gamma, rng)
    )
    return sum(ell_step(E, alpha, E.labels[k]) for alpha, k in chain)


def colength(E: GoodSet, D: GoodSet) -> int:
    """Length of I/J for value sets D ⊆ E, via truncations at a common
    point (the join of the two conductors)."""
    if not subset_of(D, E):
        raise GoodSetError("D is not contained in E")
    gamma = pt.join(D.conductor, E.conductor)
    return ell_truncation(E, gamma) - ell_truncation(D, gamma)


def colength_r2_formula(E: GoodSet, gamma: Point) -> int:
    """Closed two-branch formula: coordinate spans minus gap counts of the
    projections minus the number of maximal points."""
    if E.r != 2:
        raise GoodSetError("the closed formula needs r = 2")
    if not pt.leq(E.conductor, gamma):
        raise GoodSetError(f"gamma {gamma} must dominate the conductor")
    e1 = project_cached(E, (E.labels[0],))
    e2 = project_cached(E, (E.labels[1],))
    m = E.min
    return (
        (gamma[0] - m[0])
        - len(gaps(e1))
        + (gamma[1] - m[1])
        - len(gaps(e2))
        - len(maximal_points(E))
    )


def colength_recursive_formula(E: GoodSet, gamma: Point) -> int:
    """Recursive formula over projections.

    Recurse on the set without its last branch, then add the span of the
    last coordinate minus the gaps of the last projection minus the number
    of distinct last coordinates of relative maximals of projections that
    keep the last branch.
    """
    if not pt.leq(E.conductor, gamma):
        raise GoodSetError(f"gamma {gamma} must dominate the conductor")
    if len(gamma) != E.r:
        raise GoodSetError("gamma has wrong dimension")
    if E.r == 1:
        return (gamma[0] - E.min[0]) - len(gaps(E))
    last = E.labels[-1]
    head = E.labels[:-1]
    E_head = project_cached(E, head)
    rec = colength_recursive_formula(E_head, gamma[:-1])
    E_last = project_cached(E, (last,))
    last_values: Set[int] = set()
    for size in range(1, E.r):  # J = {last} ∪ (subset of head), J != {last}
        for rest in combinations(head, size):
            J = tuple(sorted(rest + (last,)))
            EJ = project_cached(E, J)
            pos = EJ.labels.index(last)
            for b in relative_maximals(EJ):
                last_values.add(b[pos])
    return (
        rec
        + (gamma[-1] - E.min[-1])
        - len(gaps(E_last))
        - len(last_values)
    )


def delta_invariant(S: GoodSet) -> int:
    """delta = length of (normalization / ring) = colength of S in N^r."""
    return colength(orthant(S.r, S.labels), S)


def gorenstein_length_test(S: GoodSet) -> bool:
    """Gorenstein iff delta equals the length of ring/conductor-ideal,
    i.e. the truncation of S at its conductor."""
    return delta_invariant(S) == ell_truncation(S, S.conductor)
