"""The diagonal-filling (lifting) property for pairs of maps.

Given ``left: A -> B`` and ``right: E -> Y``, the left map lifts against
the right map when every commuting square

    A --top--> E
    |          |
  left       right
    |          |
    v          v
    B -bottom> Y

admits a diagonal ``d: B -> E`` with ``d∘left = top`` and ``right∘d =
bottom``.  Squares are enumerated bottom-map-outermost, and both the
square and diagonal searches run in a fixed deterministic order, so the
first counterexample square is reproducible byte-for-byte.
"""

from __future__ import annotations

from dataclasses import dataclass

from .maps import ContinuousMap, compose, find_continuous_map, iter_continuous_maps


@dataclass(frozen=True)
class Square:
    """A commuting square from ``left`` to ``right``."""

    left: ContinuousMap
    right: ContinuousMap
    top: ContinuousMap
    bottom: ContinuousMap

    def commutes(self) -> bool:
        return compose(self.right, self.top) == compose(self.bottom, self.left)


@dataclass(frozen=True)
class LiftingResult:
    holds: bool
    counterexample: Square | None = None

    def __bool__(self) -> bool:
        return self.holds


def _fiber_masks(m: ContinuousMap) -> list[int]:
    fibers = [0] * m.cod.n
    for x, c in enumerate(m.f):
        fibers[c] |= 1 << x
    return fibers


def enumerate_commuting_squares(left: ContinuousMap, right: ContinuousMap):
    """Yield every commuting square, bottoms outermost; for each bottom
    the tops are found by restricting each point of ``left.dom`` to the
    right-map fiber over its bottom-left composite image."""
    fibers = _fiber_masks(right)
    for bottom in iter_continuous_maps(left.cod, right.cod):
        allowed = [fibers[bottom.f[left.f[a]]] for a in range(left.dom.n)]
        for top in iter_continuous_maps(left.dom, right.dom, allowed):
            yield Square(left, right, top, bottom)


def find_diagonal(square: Square) -> ContinuousMap | None:
    """A diagonal for the square, or None if no continuous one exists.

    Each point of ``left.cod`` is restricted to the right-map fiber over
    its bottom image; points in the image of ``left`` are pinned to the
    top map's values; a backtracking search with monotonicity pruning
    does the rest.
    """
    if not square.commutes():
        raise ValueError("square does not commute")
    left = square.left
    fibers = _fiber_masks(square.right)
    allowed = [fibers[square.bottom.f[b]] for b in range(left.cod.n)]
    for a in range(left.dom.n):
        allowed[left.f[a]] &= 1 << square.top.f[a]
    return find_continuous_map(left.cod, square.right.dom, allowed)


def has_lifting(left: ContinuousMap, right: ContinuousMap) -> LiftingResult:
    """Decide whether ``left`` lifts against ``right``; on failure the
    result carries the first commuting square with no diagonal."""
    for square in enumerate_commuting_squares(left, right):
        if find_diagonal(square) is None:
            return LiftingResult(False, square)
    return LiftingResult(True)
