"""Separation predicates and axioms, decided two independent ways.

Every axiom has a *direct* decision procedure that quantifies the
classical definition over points, closed sets, or subset pairs, and a
*diagram* (lifting) formulation loaded from ``formulas.txt``.  The two
are deliberately kept as separate code paths so that exhaustive
cross-validation over all small spaces (see :mod:`finsep.census`) is a
meaningful check of both.

Lifting formulations whose right map involves the unit interval cannot
be decided by square enumeration; they are decided analytically through
one fact: a continuous map from a finite space to the real line (or to
an interval model with finitely many indistinguishable twin points) is
constant on each connected component, because ``leq(x, y)`` forces
``f(y)`` into ``cl{f(x)}``, which in the reals is a singleton.  Hence a
function with ``f(A) = 0`` and ``f(B) = 1`` exists iff no component
meets both sets, and one with exact preimages exists iff both sets are
unions of components.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources

from .lifting import Square, has_lifting
from .maps import (
    ContinuousMap,
    empty_map_into,
    map_to_point,
    pair_injections,
    point_inclusions,
)
from .notation import format_mask, parse_map
from .spaces import FiniteSpace, bit_indices, popcount


class Axiom(str, Enum):
    T0 = "T0"
    R0 = "R0"
    T1 = "T1"
    R1 = "R1"
    T2 = "T2"
    T2_HALF = "T2_HALF"
    COMPLETELY_T2 = "COMPLETELY_T2"
    REGULAR = "REGULAR"
    T3 = "T3"
    COMPLETELY_REGULAR = "COMPLETELY_REGULAR"
    T3_HALF = "T3_HALF"
    NORMAL = "NORMAL"
    NORMAL_URYSOHN = "NORMAL_URYSOHN"
    T4 = "T4"
    COMPLETELY_NORMAL = "COMPLETELY_NORMAL"
    PERFECTLY_NORMAL = "PERFECTLY_NORMAL"
    TD = "TD"
    EXTREMALLY_DISCONNECTED = "EXTREMALLY_DISCONNECTED"

    def __str__(self) -> str:
        return self.value


# Composite axioms are conjunctions, never stored separately.
COMPOSITES: dict[Axiom, tuple[Axiom, ...]] = {
    Axiom.T3: (Axiom.T0, Axiom.REGULAR),
    Axiom.T3_HALF: (Axiom.T0, Axiom.COMPLETELY_REGULAR),
    Axiom.T4: (Axiom.T1, Axiom.NORMAL),
}

# R1 is stated in prose only; there is no diagram formulation to check.
DIRECT_ONLY = frozenset({Axiom.R1})

# The two transcriptions most likely to carry typesetting errors; the
# census reports their direct-vs-diagram agreement instead of asserting.
SOFT_AXIOMS = frozenset({Axiom.TD, Axiom.COMPLETELY_NORMAL})

HARD_AXIOMS = frozenset(a for a in Axiom if a not in DIRECT_ONLY and a not in SOFT_AXIOMS)

_NAME_ALIASES = {"T2.5": "T2_HALF", "T3.5": "T3_HALF", "ED": "EXTREMALLY_DISCONNECTED"}


def axiom_from_name(name: str) -> Axiom:
    key = name.strip().upper().replace("-", "_")
    key = _NAME_ALIASES.get(key, key)
    try:
        return Axiom(key)
    except ValueError:
        valid = ", ".join(a.value for a in Axiom)
        raise ValueError(f"unknown axiom {name!r}; expected one of: {valid}") from None


# Implications and equivalences asserted over every census space.
IMPLICATIONS: tuple[tuple[Axiom, Axiom], ...] = (
    (Axiom.T2, Axiom.T1),
    (Axiom.T1, Axiom.T0),
    (Axiom.T2_HALF, Axiom.T2),
    (Axiom.COMPLETELY_T2, Axiom.T2_HALF),
    (Axiom.REGULAR, Axiom.R1),
    (Axiom.R1, Axiom.R0),
    (Axiom.T3, Axiom.T2_HALF),
    (Axiom.COMPLETELY_REGULAR, Axiom.REGULAR),
    (Axiom.T3_HALF, Axiom.T3),
    (Axiom.T3_HALF, Axiom.COMPLETELY_T2),
    (Axiom.COMPLETELY_NORMAL, Axiom.NORMAL),
    (Axiom.PERFECTLY_NORMAL, Axiom.COMPLETELY_NORMAL),
)

EQUIVALENCES: tuple[tuple[Axiom, tuple[Axiom, ...]], ...] = (
    (Axiom.T1, (Axiom.T0, Axiom.R0)),
    (Axiom.T2, (Axiom.T0, Axiom.R1)),
    (Axiom.NORMAL, (Axiom.NORMAL_URYSOHN,)),
)


# -- preliminary predicates ---------------------------------------------


def distinguishable(space: FiniteSpace, x: int, y: int) -> bool:
    """Some open set contains exactly one of the two points."""
    if not (0 <= x < space.n and 0 <= y < space.n):
        raise IndexError(f"point out of range: {(x, y)}")
    return not (space.leq(x, y) and space.leq(y, x))


def separated(space: FiniteSpace, a: int, b: int) -> bool:
    """Each subset is disjoint from the other's closure."""
    return not (a & space.closure(b)) and not (b & space.closure(a))


def separated_by_neighbourhoods(space: FiniteSpace, a: int, b: int) -> bool:
    """Disjoint open sets around the two subsets exist; since the open
    hulls are the smallest such opens, it suffices that they miss each
    other."""
    return not (space.open_hull(a) & space.open_hull(b))


def separated_by_closed_neighbourhoods(space: FiniteSpace, a: int, b: int) -> bool:
    """Open sets around the two subsets with disjoint closures exist;
    closure is monotone, so the open hulls again decide."""
    return not (space.closure(space.open_hull(a)) & space.closure(space.open_hull(b)))


def separated_by_function(space: FiniteSpace, a: int, b: int) -> bool:
    """A continuous real-valued function is 0 on ``a`` and 1 on ``b``
    iff no connected component meets both (functions are
    component-constant on finite spaces)."""
    for comp in space.components:
        if comp & a and comp & b:
            return False
    return True


def precisely_separated_by_function(space: FiniteSpace, a: int, b: int) -> bool:
    """A continuous function has ``a`` and ``b`` as the exact preimages
    of 0 and 1 iff they are disjoint unions of components."""
    if a & b:
        return False
    for comp in space.components:
        if comp & a and (comp & a) != comp:
            return False
        if comp & b and (comp & b) != comp:
            return False
    return True


def subsets_disjoint(space: FiniteSpace, a: int, b: int) -> bool:
    return not (a & b)


# Weakest-to-strongest is the reverse of this tuple; each predicate
# implies the next ("given in order of increasing strength").
STRENGTH_CHAIN = (
    precisely_separated_by_function,
    separated_by_function,
    separated_by_closed_neighbourhoods,
    separated_by_neighbourhoods,
    separated,
    subsets_disjoint,
)


def strength_chain_holds(space: FiniteSpace, a: int, b: int) -> bool:
    """Check the monotone strength chain on one subset pair."""
    values = [pred(space, a, b) for pred in STRENGTH_CHAIN]
    return all(not s or w for s, w in zip(values, values[1:]))


# -- direct definitions --------------------------------------------------


def _pairs(n: int):
    for x in range(n):
        for y in range(x + 1, n):
            yield x, y


def _direct_t0(s: FiniteSpace) -> bool:
    return all(distinguishable(s, x, y) for x, y in _pairs(s.n))


def _direct_r0(s: FiniteSpace) -> bool:
    return all(
        separated(s, 1 << x, 1 << y)
        for x, y in _pairs(s.n)
        if distinguishable(s, x, y)
    )


def _direct_t1(s: FiniteSpace) -> bool:
    return all(separated(s, 1 << x, 1 << y) for x, y in _pairs(s.n))


def _direct_r1(s: FiniteSpace) -> bool:
    return all(
        separated_by_neighbourhoods(s, 1 << x, 1 << y)
        for x, y in _pairs(s.n)
        if distinguishable(s, x, y)
    )


def _direct_t2(s: FiniteSpace) -> bool:
    return all(separated_by_neighbourhoods(s, 1 << x, 1 << y) for x, y in _pairs(s.n))


def _direct_t2_half(s: FiniteSpace) -> bool:
    return all(
        separated_by_closed_neighbourhoods(s, 1 << x, 1 << y) for x, y in _pairs(s.n)
    )


def _direct_completely_t2(s: FiniteSpace) -> bool:
    return all(separated_by_function(s, 1 << x, 1 << y) for x, y in _pairs(s.n))


def _point_closed_pairs(s: FiniteSpace):
    closed = s.closed_sets()
    for x in range(s.n):
        for f_mask in closed:
            if not (f_mask >> x & 1):
                yield x, f_mask


def _direct_regular(s: FiniteSpace) -> bool:
    return all(
        separated_by_neighbourhoods(s, 1 << x, f_mask)
        for x, f_mask in _point_closed_pairs(s)
    )


def _direct_completely_regular(s: FiniteSpace) -> bool:
    return all(
        separated_by_function(s, 1 << x, f_mask)
        for x, f_mask in _point_closed_pairs(s)
    )


def _disjoint_closed_pairs(s: FiniteSpace):
    closed = s.closed_sets()
    for i, c in enumerate(closed):
        for d in closed[i:]:
            if not (c & d):
                yield c, d


def _direct_normal(s: FiniteSpace) -> bool:
    return all(
        separated_by_neighbourhoods(s, c, d) for c, d in _disjoint_closed_pairs(s)
    )


def _direct_normal_urysohn(s: FiniteSpace) -> bool:
    return all(separated_by_function(s, c, d) for c, d in _disjoint_closed_pairs(s))


def _direct_completely_normal(s: FiniteSpace) -> bool:
    size = 1 << s.n
    for a in range(size):
        for b in range(a, size):
            if separated(s, a, b) and not separated_by_neighbourhoods(s, a, b):
                return False
    return True


def _direct_perfectly_normal(s: FiniteSpace) -> bool:
    return all(
        precisely_separated_by_function(s, c, d) for c, d in _disjoint_closed_pairs(s)
    )


def _direct_td(s: FiniteSpace) -> bool:
    opens = s.open_sets()
    closeds = s.closed_sets()
    return all(
        any(u & z == 1 << x for u in opens for z in closeds) for x in range(s.n)
    )


def _direct_extremally_disconnected(s: FiniteSpace) -> bool:
    return all(s.is_open(s.closure(u)) for u in s.open_sets())


_DIRECT: dict[Axiom, object] = {
    Axiom.T0: _direct_t0,
    Axiom.R0: _direct_r0,
    Axiom.T1: _direct_t1,
    Axiom.R1: _direct_r1,
    Axiom.T2: _direct_t2,
    Axiom.T2_HALF: _direct_t2_half,
    Axiom.COMPLETELY_T2: _direct_completely_t2,
    Axiom.REGULAR: _direct_regular,
    Axiom.COMPLETELY_REGULAR: _direct_completely_regular,
    Axiom.NORMAL: _direct_normal,
    Axiom.NORMAL_URYSOHN: _direct_normal_urysohn,
    Axiom.COMPLETELY_NORMAL: _direct_completely_normal,
    Axiom.PERFECTLY_NORMAL: _direct_perfectly_normal,
    Axiom.TD: _direct_td,
    Axiom.EXTREMALLY_DISCONNECTED: _direct_extremally_disconnected,
}


def check_axiom_direct(space: FiniteSpace, axiom: Axiom | str) -> bool:
    """Decide an axiom by quantifying its classical definition."""
    axiom = Axiom(axiom)
    if axiom in COMPOSITES:
        return all(check_axiom_direct(space, part) for part in COMPOSITES[axiom])
    return _DIRECT[axiom](space)


# -- diagram formulations ------------------------------------------------


@dataclass(frozen=True)
class FormulaRow:
    """One fixture line: how to build the two maps of a lifting problem."""

    axiom: str
    left_kind: str  # 'fixed' | 'injections-2pt' | 'points' | 'empty'
    left: str | None
    right_kind: str  # 'to-point' | 'fixed' | 'real-line'
    right: str | None


@lru_cache(maxsize=None)
def load_formulas() -> dict[str, FormulaRow]:
    text = resources.files(__package__).joinpath("formulas.txt").read_text("utf-8")
    rows: dict[str, FormulaRow] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 5:
            raise ValueError(f"malformed formula row: {raw!r}")
        ident, left_kind, left, right_kind, right = parts
        rows[ident] = FormulaRow(
            ident,
            left_kind,
            None if left == "-" else left,
            right_kind,
            None if right == "-" else right,
        )
    return rows


@dataclass(frozen=True)
class LiftingCheck:
    """Outcome of a diagram-formulation check.

    ``witness`` explains a failure: a :class:`Square` with no diagonal
    for pure finite formulas, or a text reason for interval models.
    """

    holds: bool
    witness: Square | str | None = None

    def __bool__(self) -> bool:
        return self.holds


@lru_cache(maxsize=None)
def _fixed_map(text: str) -> ContinuousMap:
    return parse_map(text)


def _left_family(space: FiniteSpace, row: FormulaRow) -> list[ContinuousMap]:
    if row.left_kind == "fixed":
        return [_fixed_map(row.left)]
    if row.left_kind == "injections-2pt":
        return pair_injections(space)
    if row.left_kind == "points":
        return point_inclusions(space)
    if row.left_kind == "empty":
        return [empty_map_into(space)]
    raise ValueError(f"unknown left kind: {row.left_kind}")


def _model_interval_to_point(space: FiniteSpace) -> LiftingCheck:
    for comp in space.components:
        if popcount(comp) >= 2:
            x, y = list(bit_indices(comp))[:2]
            return LiftingCheck(
                False,
                f"points {space.label(x)} and {space.label(y)} share a connected "
                "component, so no continuous function separates them",
            )
    return LiftingCheck(True)


def _model_interval_with_extra_point(space: FiniteSpace) -> LiftingCheck:
    for x in range(space.n):
        outside = space.component_of(x) & ~space.min_open(x)
        if outside:
            f_mask = space.full_mask & ~space.min_open(x)
            return LiftingCheck(
                False,
                f"the component of {space.label(x)} meets the closed set "
                f"{format_mask(space, f_mask)}, so no continuous function "
                "separates the point from it",
            )
    return LiftingCheck(True)


def _model_interval_doubled_endpoints(space: FiniteSpace) -> LiftingCheck:
    for c, d in _disjoint_closed_pairs(space):
        for comp in space.components:
            if comp & c and comp & d:
                return LiftingCheck(
                    False,
                    f"a component meets both disjoint closed sets "
                    f"{format_mask(space, c)} and {format_mask(space, d)}, so no "
                    "continuous function separates them",
                )
    return LiftingCheck(True)


def _model_interval_over_three_point_chain(space: FiniteSpace) -> LiftingCheck:
    for x in range(space.n):
        if space.cl[x] != space.component_of(x):
            return LiftingCheck(
                False,
                f"the closed set {format_mask(space, space.cl[x])} is not a union "
                "of components, so no continuous function has it as an exact "
                "zero set",
            )
    return LiftingCheck(True)


_REAL_LINE_MODELS = {
    "interval-to-point": _model_interval_to_point,
    "interval-with-extra-point": _model_interval_with_extra_point,
    "interval-doubled-endpoints": _model_interval_doubled_endpoints,
    "interval-over-three-point-chain": _model_interval_over_three_point_chain,
}


def check_formula(space: FiniteSpace, row: FormulaRow) -> LiftingCheck:
    """Run one fixture row against a space."""
    if row.right_kind == "real-line":
        return _REAL_LINE_MODELS[row.right](space)
    if row.right_kind == "to-point":
        right = map_to_point(space)
    elif row.right_kind == "fixed":
        right = _fixed_map(row.right)
    else:
        raise ValueError(f"unknown right kind: {row.right_kind}")
    for left in _left_family(space, row):
        result = has_lifting(left, right)
        if not result.holds:
            return LiftingCheck(False, result.counterexample)
    return LiftingCheck(True)


def check_axiom_lifting(space: FiniteSpace, axiom: Axiom | str) -> LiftingCheck:
    """Decide an axiom by its diagram formulation.

    Raises ValueError for R1, which has no such formulation.
    """
    axiom = Axiom(axiom)
    if axiom in DIRECT_ONLY:
        raise ValueError(f"{axiom.value} has no diagram formulation; use the direct method")
    if axiom in COMPOSITES:
        for part in COMPOSITES[axiom]:
            result = check_axiom_lifting(space, part)
            if not result.holds:
                return result
        return LiftingCheck(True)
    return check_formula(space, load_formulas()[axiom.value])
