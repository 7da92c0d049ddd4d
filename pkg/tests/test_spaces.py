import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finsep.spaces import (
    MAX_POINTS,
    FiniteSpace,
    SpaceError,
    are_homeomorphic,
    bit_indices,
    build_space,
    canonical_arrows,
    homeomorphism,
    invariant_key,
    mask_of,
    popcount,
)

from naive import naive_closed_sets, naive_transitive_closure, set_of
from strategies import spaces, space_with_subset


def test_bit_helpers():
    assert list(bit_indices(0b1011)) == [0, 1, 3]
    assert mask_of([0, 1, 3]) == 0b1011
    assert popcount(0b1011) == 3
    assert mask_of([]) == 0


def test_sierpinski_closures():
    s = build_space(2, [(0, 1)])
    assert s.cl == (0b11, 0b10)
    assert s.closure(0b01) == 0b11
    assert s.interior(0b01) == 0b01
    assert s.is_open(0b01) and not s.is_closed(0b01)
    assert s.is_closed(0b10) and not s.is_open(0b10)
    assert s.min_open(0) == 0b01
    assert s.min_open(1) == 0b11


def test_two_generator_vee():
    s = build_space(3, [(0, 2), (1, 2)])
    assert s.cl == (0b101, 0b110, 0b100)
    assert s.open_sets() == [0b000, 0b001, 0b010, 0b011, 0b111]
    assert s.closed_sets() == [0b000, 0b100, 0b101, 0b110, 0b111]


def test_validation_rejects_bad_matrices():
    with pytest.raises(SpaceError):
        FiniteSpace(2, (0b01, 0b01))  # point 1 missing from its own closure
    with pytest.raises(SpaceError):
        FiniteSpace(3, (0b011, 0b110, 0b100))  # not transitive
    with pytest.raises(SpaceError):
        FiniteSpace(2, (0b11,))  # wrong row count
    with pytest.raises(SpaceError):
        FiniteSpace(MAX_POINTS + 1, tuple(1 << i for i in range(MAX_POINTS + 1)))


@given(st.integers(0, 5), st.data())
def test_build_space_matches_naive_transitive_closure(n, data):
    if n:
        arrows = data.draw(
            st.lists(
                st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=12
            )
        )
    else:
        arrows = []
    space = build_space(n, arrows)
    reach = naive_transitive_closure(n, arrows)
    assert [set_of(m) for m in space.cl] == reach


@given(space_with_subset())
def test_closure_is_extensive_idempotent_monotone(sm):
    space, mask = sm
    cl = space.closure(mask)
    assert mask & ~cl == 0
    assert space.closure(cl) == cl
    sub = mask & (mask - 1)  # drop one element
    assert space.closure(sub) & ~cl == 0


@given(space_with_subset(), st.data())
def test_closure_distributes_over_union(sm, data):
    space, a = sm
    b = data.draw(st.integers(0, (1 << space.n) - 1))
    assert space.closure(a | b) == space.closure(a) | space.closure(b)


@given(space_with_subset())
def test_open_iff_complement_closed(sm):
    space, mask = sm
    comp = space.full_mask & ~mask
    assert space.is_open(mask) == space.is_closed(comp)
    assert space.interior(mask) == space.full_mask & ~space.closure(comp)


@given(spaces(max_n=4))
def test_open_sets_form_a_topology(space):
    opens = set(space.open_sets())
    assert 0 in opens and space.full_mask in opens
    for u, v in itertools.product(opens, repeat=2):
        assert u | v in opens
        assert u & v in opens


@given(spaces(max_n=4))
def test_closed_sets_match_naive_definition(space):
    expected = sorted(mask_of(s) for s in naive_closed_sets(space))
    assert sorted(space.closed_sets()) == expected


@given(space_with_subset())
def test_open_hull_is_smallest_open_superset(sm):
    space, mask = sm
    hull = space.open_hull(mask)
    assert space.is_open(hull) and mask & ~hull == 0
    for u in space.open_sets():
        if mask & ~u == 0:
            assert hull & ~u == 0


@given(spaces())
def test_min_open_generates_opens(space):
    for x in range(space.n):
        m = space.min_open(x)
        assert space.is_open(m) and m >> x & 1
        for u in space.open_sets():
            if u >> x & 1:
                assert m & ~u == 0


@given(spaces())
def test_components_partition_and_are_clopen(space):
    comps = space.components
    assert sum(popcount(c) for c in comps) == space.n
    union = 0
    for c in comps:
        assert union & c == 0
        union |= c
        assert space.is_open(c) and space.is_closed(c)
    assert union == space.full_mask


@given(spaces())
def test_components_are_connected(space):
    # a component admits no proper nonempty clopen piece (components are
    # clopen, so clopen-in-the-subspace equals clopen-in-the-space here)
    for c in space.components:
        for u in space.open_sets():
            part = u & c
            if part and part != c:
                assert not space.is_closed(part)


@given(spaces())
def test_indistinguishability_classes_group_equal_closures(space):
    for cls in space.indistinguishability_classes:
        rows = {space.cl[x] for x in cls}
        assert len(rows) == 1
    covered = sorted(x for cls in space.indistinguishability_classes for x in cls)
    assert covered == list(range(space.n))


@given(spaces(max_n=4), st.data())
def test_relabeling_permutation_is_a_homeomorphism(space, data):
    perm = data.draw(st.permutations(range(space.n)))
    cl = [0] * space.n
    for x in range(space.n):
        for y in bit_indices(space.cl[x]):
            cl[perm[x]] |= 1 << perm[y]
    other = FiniteSpace(space.n, tuple(cl))
    assert are_homeomorphic(space, other)
    assert invariant_key(space) == invariant_key(other)
    found = homeomorphism(space, other)
    assert found is not None
    for x in range(space.n):
        for y in range(space.n):
            assert space.leq(x, y) == other.leq(found[x], found[y])


def test_non_homeomorphic_pairs():
    sier = build_space(2, [(0, 1)])
    disc = build_space(2, [])
    anti = build_space(2, [(0, 1), (1, 0)])
    assert not are_homeomorphic(sier, disc)
    assert not are_homeomorphic(sier, anti)
    assert not are_homeomorphic(disc, anti)
    assert are_homeomorphic(sier, build_space(2, [(1, 0)]))


@given(spaces())
def test_canonical_arrows_regenerate_the_relation(space):
    rebuilt = build_space(space.n, canonical_arrows(space))
    assert rebuilt.cl == space.cl


@settings(max_examples=30)
@given(spaces(max_n=4))
def test_alexandrov_closure_of_set_is_union_of_point_closures(space):
    for mask in range(1 << space.n):
        expected = 0
        for x in bit_indices(mask):
            expected |= space.cl[x]
        assert space.closure(mask) == expected
