"""Componentwise lattice arithmetic on integer vectors.

Points are plain tuples of ints ordered by the product (componentwise)
partial order on Z^r.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, Tuple

from .errors import DimensionMismatchError

Point = Tuple[int, ...]


def _check_dims(a: Point, b: Point) -> None:
    if len(a) != len(b):
        raise DimensionMismatchError(f"dimension mismatch: {a} vs {b}")


def meet(a: Point, b: Point) -> Point:
    """Componentwise minimum."""
    _check_dims(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def join(a: Point, b: Point) -> Point:
    """Componentwise maximum."""
    _check_dims(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def leq(a: Point, b: Point) -> bool:
    _check_dims(a, b)
    return all(x <= y for x, y in zip(a, b))


def lt(a: Point, b: Point) -> bool:
    """Strict inequality in every coordinate."""
    _check_dims(a, b)
    return all(x < y for x, y in zip(a, b))


def add(a: Point, b: Point) -> Point:
    _check_dims(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Point, b: Point) -> Point:
    _check_dims(a, b)
    return tuple(x - y for x, y in zip(a, b))


def unit(r: int, position: int) -> Point:
    """The vector e with a single 1 at ``position`` (0-based)."""
    return tuple(1 if k == position else 0 for k in range(r))


def ones(r: int) -> Point:
    return (1,) * r


def zeros(r: int) -> Point:
    return (0,) * r


def box(lo: Point, hi: Point) -> Iterator[Point]:
    """All lattice points of [lo, hi], in lexicographic order."""
    _check_dims(lo, hi)
    ranges = [range(a, b + 1) for a, b in zip(lo, hi)]
    return product(*ranges)


def meet_all(points: Iterable[Point]) -> Point:
    it = iter(points)
    out = next(it)
    for p in it:
        out = meet(out, p)
    return out


def join_all(points: Iterable[Point]) -> Point:
    it = iter(points)
    out = next(it)
    for p in it:
        out = join(out, p)
    return out
