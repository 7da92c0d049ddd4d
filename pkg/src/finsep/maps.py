"""Continuous maps between finite spaces, and their exhaustive enumeration.

For finite spaces continuity is exactly monotonicity of the specialization
preorder: ``leq(x, y)`` in the domain must imply ``leq(f(x), f(y))`` in the
codomain.  Enumeration backtracks over the points of the domain in a fixed
linear extension (smallest closure first) and prunes candidate images
against every already-placed comparable point, so the naive ``|Y|^|X|``
search collapses to the monotone assignments only.  All search orders are
deterministic, which keeps reported witnesses byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .spaces import FiniteSpace, bit_indices, build_space, popcount


class ContinuityError(ValueError):
    """A point function between finite spaces that is not continuous."""


@dataclass(frozen=True)
class ContinuousMap:
    """A continuous map ``dom -> cod``; ``f[x]`` is the image of point x.

    Instances are trusted monotone; build one from untrusted data with
    :func:`check_continuous`.  Equality compares the two spaces and the
    function array, so enumerated maps deduplicate by value.
    """

    dom: FiniteSpace
    cod: FiniteSpace
    f: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.f[x]

    def is_injective(self) -> bool:
        return len(set(self.f)) == self.dom.n

    def is_surjective(self) -> bool:
        return len(set(self.f)) == self.cod.n

    def image_mask(self) -> int:
        mask = 0
        for c in self.f:
            mask |= 1 << c
        return mask


def continuity_witness(dom: FiniteSpace, cod: FiniteSpace, f) -> tuple[int, int] | None:
    """First domain arrow ``(x, y)`` whose images are not comparable the
    same way, or None when the function is continuous."""
    for x in range(dom.n):
        fx = f[x]
        for y in bit_indices(dom.cl[x]):
            if not cod.leq(fx, f[y]):
                return (x, y)
    return None


def check_continuous(dom: FiniteSpace, cod: FiniteSpace, f) -> ContinuousMap:
    f = tuple(f)
    if len(f) != dom.n:
        raise ContinuityError(f"function lists {len(f)} values for {dom.n} points")
    for x, c in enumerate(f):
        if not 0 <= c < cod.n:
            raise ContinuityError(f"image of point {dom.label(x)} is out of range: {c}")
    witness = continuity_witness(dom, cod, f)
    if witness is not None:
        x, y = witness
        raise ContinuityError(
            f"not continuous: {dom.label(y)} is in the closure of {dom.label(x)} "
            f"but {cod.label(f[y])} is not in the closure of {cod.label(f[x])}"
        )
    return ContinuousMap(dom, cod, f)


# -- enumeration ---------------------------------------------------------


def _up_rows(cl: tuple[int, ...]) -> tuple[int, ...]:
    n = len(cl)
    rows = [0] * n
    for x in range(n):
        for y in bit_indices(cl[x]):
            rows[y] |= 1 << x
    return tuple(rows)


def _search(dom_cl, cod_cl, cod_up, allowed):
    """Yield monotone assignment tuples with ``f[x]`` restricted to the
    bitmask ``allowed[x]``.  Points are processed smallest-closure-first
    and candidates in ascending index order; constraint propagation
    shrinks the masks of unplaced points after each placement."""
    n = len(dom_cl)
    order = sorted(range(n), key=lambda x: (popcount(dom_cl[x]), x))
    f = [0] * n

    def place(k: int, masks: list[int]):
        if k == n:
            yield tuple(f)
            return
        p = order[k]
        rest = order[k + 1 :]
        for c in bit_indices(masks[p]):
            f[p] = c
            new_masks = list(masks)
            feasible = True
            for q in rest:
                m = new_masks[q]
                if dom_cl[p] >> q & 1:  # leq(p, q): image must be in cl of c
                    m &= cod_cl[c]
                if dom_cl[q] >> p & 1:  # leq(q, p): image must be below c
                    m &= cod_up[c]
                if m == 0:
                    feasible = False
                    break
                new_masks[q] = m
            if feasible:
                yield from place(k + 1, new_masks)

    yield from place(0, list(allowed))


@lru_cache(maxsize=None)
def _all_maps_raw(dom_cl: tuple, cod_cl: tuple) -> tuple:
    full = (1 << len(cod_cl)) - 1
    return tuple(_search(dom_cl, cod_cl, _up_rows(cod_cl), [full] * len(dom_cl)))


def enumerate_continuous_maps(dom: FiniteSpace, cod: FiniteSpace) -> list[ContinuousMap]:
    """All continuous maps ``dom -> cod`` in a fixed deterministic order.

    Results are cached per preorder pair, so repeated lifting checks over
    the same shapes do not re-run the search.
    """
    return [ContinuousMap(dom, cod, f) for f in _all_maps_raw(dom.cl, cod.cl)]


def iter_continuous_maps(dom: FiniteSpace, cod: FiniteSpace, allowed=None):
    """Lazily yield continuous maps; ``allowed[x]`` (a bitmask per domain
    point) restricts candidate images, e.g. to the fibers of another map."""
    if allowed is None:
        for f in _all_maps_raw(dom.cl, cod.cl):
            yield ContinuousMap(dom, cod, f)
        return
    for f in _search(dom.cl, cod.cl, cod.up, list(allowed)):
        yield ContinuousMap(dom, cod, f)


def find_continuous_map(dom: FiniteSpace, cod: FiniteSpace, allowed=None) -> ContinuousMap | None:
    return next(iter_continuous_maps(dom, cod, allowed), None)


def count_continuous_maps(dom: FiniteSpace, cod: FiniteSpace) -> int:
    return len(_all_maps_raw(dom.cl, cod.cl))


# -- algebra -------------------------------------------------------------


def compose(g: ContinuousMap, f: ContinuousMap) -> ContinuousMap:
    """The composite ``g after f`` (so ``compose(g, f)(x) == g(f(x))``)."""
    if f.cod != g.dom:
        raise ValueError("cannot compose: codomain of the inner map differs from domain of the outer map")
    return ContinuousMap(f.dom, g.cod, tuple(g.f[c] for c in f.f))


def identity_map(space: FiniteSpace) -> ContinuousMap:
    return ContinuousMap(space, space, tuple(range(space.n)))


def constant_map(dom: FiniteSpace, cod: FiniteSpace, c: int) -> ContinuousMap:
    if not 0 <= c < cod.n:
        raise ValueError(f"constant value out of range: {c}")
    return ContinuousMap(dom, cod, (c,) * dom.n)


def point_space(label: str = "*") -> FiniteSpace:
    return build_space(1, (), (label,))


def empty_space() -> FiniteSpace:
    return FiniteSpace(0, ())


def map_to_point(space: FiniteSpace, label: str = "*") -> ContinuousMap:
    """The unique map onto the one-point space."""
    return ContinuousMap(space, point_space(label), (0,) * space.n)


def empty_map_into(space: FiniteSpace) -> ContinuousMap:
    """The unique map from the empty space."""
    return ContinuousMap(empty_space(), space, ())


def point_inclusion(space: FiniteSpace, x: int) -> ContinuousMap:
    """The map from a one-point space selecting point ``x``."""
    return ContinuousMap(point_space(space.label(x)), space, (x,))


def point_inclusions(space: FiniteSpace) -> list[ContinuousMap]:
    return [point_inclusion(space, x) for x in range(space.n)]


def pair_injections(space: FiniteSpace) -> list[ContinuousMap]:
    """All injective maps from the two-point discrete space, one per
    ordered pair of distinct points."""
    out = []
    for a in range(space.n):
        for b in range(space.n):
            if a != b:
                dom = build_space(2, (), (space.label(a), space.label(b)))
                out.append(ContinuousMap(dom, space, (a, b)))
    return out


def find_factorization(i: ContinuousMap, q: ContinuousMap) -> ContinuousMap | None:
    """Some continuous ``p`` with ``compose(q, p) == i``, or None.

    The search constrains each point of ``i``'s domain to the q-fiber of
    its i-image and backtracks with monotonicity pruning.
    """
    if i.cod != q.cod:
        raise ValueError("cannot factor: the two maps have different codomains")
    fibers = [0] * q.cod.n
    for b, c in enumerate(q.f):
        fibers[c] |= 1 << b
    allowed = [fibers[i.f[a]] for a in range(i.dom.n)]
    return find_continuous_map(i.dom, q.dom, allowed)
