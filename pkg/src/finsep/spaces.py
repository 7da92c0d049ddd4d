"""Finite topological spaces stored as specialization preorders.

Convention used throughout the package (stated once, here): ``x <= y`` means
``y in cl{x}``.  Under this convention a subset is closed iff it is
down-closed (following ``<=`` out of any member stays inside), open iff its
complement is closed, and the row ``cl[x]`` is literally the closure of the
singleton ``{x}``.  Monotone functions between the preorders are exactly the
continuous maps between the spaces, so everything downstream (map
enumeration, diagram lifting) works on the relation alone.

Subsets of a space are plain ints used as bitmasks over point indices,
which keeps the set algebra constant-time; spaces are capped at 63 points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

MAX_POINTS = 63


class SpaceError(ValueError):
    """Raised for malformed space data (bad arrows, masks, labels)."""


def bit_indices(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(points) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class FiniteSpace:
    """A finite space: ``cl[x]`` is the bitmask of the closure of ``{x}``.

    The relation must already be reflexive and transitive; use
    :func:`build_space` to close an arbitrary arrow list.  ``labels`` is
    presentation data only and is ignored by equality and hashing.
    """

    n: int
    cl: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_POINTS:
            raise SpaceError(f"point count {self.n} outside supported range 0..{MAX_POINTS}")
        if len(self.cl) != self.n:
            raise SpaceError(f"expected {self.n} closure rows, got {len(self.cl)}")
        full = (1 << self.n) - 1
        for x, row in enumerate(self.cl):
            if row < 0 or row & ~full:
                raise SpaceError(f"closure row of point {x} is not a mask over {self.n} points")
            if not row >> x & 1:
                raise SpaceError(f"relation is not reflexive at point {x}")
        for x, row in enumerate(self.cl):
            acc = row
            for y in bit_indices(row):
                acc |= self.cl[y]
            if acc != row:
                raise SpaceError(f"relation is not transitive at point {x}")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise SpaceError("label count does not match point count")
            if len(set(self.labels)) != self.n:
                raise SpaceError("labels within one space must be unique")

    # -- basic structure -------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def up(self) -> tuple[int, ...]:
        """``up[y]`` = {x : x <= y} = the minimal open set containing y."""
        rows = [0] * self.n
        for x in range(self.n):
            for y in bit_indices(self.cl[x]):
                rows[y] |= 1 << x
        return tuple(rows)

    def leq(self, x: int, y: int) -> bool:
        return bool(self.cl[x] >> y & 1)

    def label(self, x: int) -> str:
        if self.labels is not None:
            return self.labels[x]
        return default_label(x)

    def _check_mask(self, mask: int) -> None:
        if mask < 0 or mask & ~self.full_mask:
            raise SpaceError(f"mask {mask:#x} does not fit a {self.n}-point space")

    # -- set algebra -----------------------------------------------------

    def closure(self, mask: int) -> int:
        self._check_mask(mask)
        acc = mask
        for x in bit_indices(mask):
            acc |= self.cl[x]
        return acc

    def interior(self, mask: int) -> int:
        self._check_mask(mask)
        return self.full_mask & ~self.closure(self.full_mask & ~mask)

    def is_closed(self, mask: int) -> bool:
        self._check_mask(mask)
        return self.closure(mask) == mask

    def is_open(self, mask: int) -> bool:
        self._check_mask(mask)
        return self.is_closed(self.full_mask & ~mask)

    def min_open(self, x: int) -> int:
        """Smallest open set containing the point ``x``."""
        return self.up[x]

    def open_hull(self, mask: int) -> int:
        """Smallest open superset of ``mask``."""
        self._check_mask(mask)
        acc = mask
        for x in bit_indices(mask):
            acc |= self.up[x]
        return acc

    def open_sets(self) -> list[int]:
        return [m for m in range(1 << self.n) if self.is_open(m)]

    def closed_sets(self) -> list[int]:
        return [m for m in range(1 << self.n) if self.is_closed(m)]

    # -- connectivity ----------------------------------------------------

    @cached_property
    def components(self) -> tuple[int, ...]:
        """Masks of the connected components, ordered by least member."""
        comps = []
        seen = 0
        for start in range(self.n):
            if seen >> start & 1:
                continue
            comp = 1 << start
            frontier = comp
            while frontier:
                grow = 0
                for x in bit_indices(frontier):
                    grow |= self.cl[x] | self.up[x]
                frontier = grow & ~comp
                comp |= grow
            comps.append(comp)
            seen |= comp
        return tuple(comps)

    @cached_property
    def component_index(self) -> tuple[int, ...]:
        idx = [0] * self.n
        for i, comp in enumerate(self.components):
            for x in bit_indices(comp):
                idx[x] = i
        return tuple(idx)

    def component_of(self, x: int) -> int:
        return self.components[self.component_index[x]]

    # -- indistinguishability / condensation -----------------------------

    @cached_property
    def indistinguishability_classes(self) -> tuple[tuple[int, ...], ...]:
        """Classes of points with ``x <= y`` and ``y <= x``, by least member."""
        out = []
        seen = 0
        for x in range(self.n):
            if seen >> x & 1:
                continue
            cls = self.cl[x] & self.up[x]
            out.append(tuple(bit_indices(cls)))
            seen |= cls
        return tuple(out)


def default_label(i: int) -> str:
    if i < 26:
        return chr(ord("a") + i)
    return chr(ord("a") + i % 26) + str(i // 26)


def build_space(n: int, arrows, labels=None) -> FiniteSpace:
    """Build a space from generating arrows ``(x, y)`` meaning ``y in cl{x}``.

    The reflexive-transitive closure is always taken, so callers never hand
    over a non-preorder.  Arrow endpoints outside ``range(n)`` raise
    :class:`SpaceError` naming the offending pair.
    """
    if not 0 <= n <= MAX_POINTS:
        raise SpaceError(f"point count {n} outside supported range 0..{MAX_POINTS}")
    rows = [1 << i for i in range(n)]
    for pair in arrows:
        x, y = pair
        if not (0 <= x < n and 0 <= y < n):
            raise SpaceError(f"arrow {(x, y)} mentions a point outside 0..{n - 1}")
        rows[x] |= 1 << y
    changed = True
    while changed:
        changed = False
        for x in range(n):
            acc = rows[x]
            for y in bit_indices(rows[x]):
                acc |= rows[y]
            if acc != rows[x]:
                rows[x] = acc
                changed = True
    return FiniteSpace(n, tuple(rows), tuple(labels) if labels is not None else None)


# -- isomorphism ---------------------------------------------------------


def _refined_colors(space: FiniteSpace) -> tuple[int, ...]:
    """Iterated neighbourhood refinement; ranks are comparable across spaces
    whenever the colour multisets coincide (all we need for screening)."""
    colors = [(popcount(space.cl[x]), popcount(space.up[x])) for x in range(space.n)]
    for _ in range(max(space.n, 1)):
        sigs = []
        for x in range(space.n):
            nbr = []
            for y in bit_indices((space.cl[x] | space.up[x]) & ~(1 << x)):
                nbr.append((colors[y], space.leq(x, y), space.leq(y, x)))
            sigs.append((colors[x], tuple(sorted(nbr))))
        ranking = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            break
        colors = new
    return tuple(colors)


def invariant_key(space: FiniteSpace) -> tuple:
    """A cheap homeomorphism invariant used to bucket candidate spaces."""
    return (space.n, tuple(sorted(_refined_colors(space))))


def homeomorphism(s1: FiniteSpace, s2: FiniteSpace):
    """Return a point bijection witnessing a homeomorphism, or ``None``.

    Backtracking over colour-compatible candidates; colours come from the
    invariant refinement, so mismatched shapes are rejected before search.
    """
    if s1.n != s2.n:
        return None
    c1, c2 = _refined_colors(s1), _refined_colors(s2)
    if sorted(c1) != sorted(c2):
        return None
    n = s1.n
    perm = [-1] * n
    used = 0

    def extend(x: int):
        nonlocal used
        if x == n:
            return True
        for y in range(n):
            if used >> y & 1 or c1[x] != c2[y]:
                continue
            ok = True
            for x2 in range(x):
                y2 = perm[x2]
                if s1.leq(x, x2) != s2.leq(y, y2) or s1.leq(x2, x) != s2.leq(y2, y):
                    ok = False
                    break
            if ok:
                perm[x] = y
                used |= 1 << y
                if extend(x + 1):
                    return True
                perm[x] = -1
                used &= ~(1 << y)
        return False

    return tuple(perm) if extend(0) else None


def are_homeomorphic(s1: FiniteSpace, s2: FiniteSpace) -> bool:
    return homeomorphism(s1, s2) is not None


# -- canonical generating arrows ----------------------------------------


def canonical_arrows(space: FiniteSpace) -> tuple[tuple[int, int], ...]:
    """A minimal, deterministic arrow list regenerating the relation.

    Indistinguishable classes of size k >= 2 contribute a k-cycle over their
    sorted members; the condensation order contributes its transitive
    reduction, one arrow per reduced edge between least members.  Sorted
    lexicographically.  ``build_space`` over the result reproduces ``cl``.
    """
    classes = space.indistinguishability_classes
    reps = [cls[0] for cls in classes]
    arrows: list[tuple[int, int]] = []
    for cls in classes:
        if len(cls) >= 2:
            for i, x in enumerate(cls):
                arrows.append((x, cls[(i + 1) % len(cls)]))
    k = len(reps)
    edge = [[p != q and space.leq(reps[p], reps[q]) for q in range(k)] for p in range(k)]
    for p in range(k):
        for q in range(k):
            if not edge[p][q]:
                continue
            if any(r != p and r != q and edge[p][r] and edge[r][q] for r in range(k)):
                continue
            arrows.append((reps[p], reps[q]))
    return tuple(sorted(set(arrows)))
