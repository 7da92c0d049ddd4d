import pytest
from hypothesis import given, settings

from finsep.axioms import (
    COMPOSITES,
    DIRECT_ONLY,
    EQUIVALENCES,
    HARD_AXIOMS,
    IMPLICATIONS,
    SOFT_AXIOMS,
    Axiom,
    axiom_from_name,
    check_axiom_direct,
    check_axiom_lifting,
    check_formula,
    distinguishable,
    load_formulas,
    precisely_separated_by_function,
    separated,
    separated_by_closed_neighbourhoods,
    separated_by_function,
    separated_by_neighbourhoods,
    strength_chain_holds,
)
from finsep.census import classify_space, enumerate_topologies, lifting_classification
from finsep.maps import check_continuous, compose, find_factorization
from finsep.notation import parse_map, parse_space

from strategies import space_with_two_subsets

SIERPINSKI_TABLE = {
    "T0": True, "R0": False, "T1": False, "R1": False, "T2": False,
    "T2_HALF": False, "COMPLETELY_T2": False, "REGULAR": False, "T3": False,
    "COMPLETELY_REGULAR": False, "T3_HALF": False, "NORMAL": True,
    "NORMAL_URYSOHN": True, "T4": False, "COMPLETELY_NORMAL": True,
    "PERFECTLY_NORMAL": False, "TD": True, "EXTREMALLY_DISCONNECTED": True,
}

ANTIDISCRETE_TABLE = {
    "T0": False, "R0": True, "T1": False, "R1": True, "T2": False,
    "T2_HALF": False, "COMPLETELY_T2": False, "REGULAR": True, "T3": False,
    "COMPLETELY_REGULAR": True, "T3_HALF": False, "NORMAL": True,
    "NORMAL_URYSOHN": True, "T4": False, "COMPLETELY_NORMAL": True,
    "PERFECTLY_NORMAL": True, "TD": False, "EXTREMALLY_DISCONNECTED": True,
}


def test_axiom_registry_is_partitioned():
    assert HARD_AXIOMS | SOFT_AXIOMS | DIRECT_ONLY == set(Axiom)
    assert not HARD_AXIOMS & SOFT_AXIOMS
    assert not HARD_AXIOMS & DIRECT_ONLY
    for comp, parts in COMPOSITES.items():
        assert comp in HARD_AXIOMS
        assert all(isinstance(p, Axiom) for p in parts)
    for a, b in IMPLICATIONS:
        assert isinstance(a, Axiom) and isinstance(b, Axiom)
    for lhs, parts in EQUIVALENCES:
        assert isinstance(lhs, Axiom) and parts


def test_axiom_name_aliases():
    assert axiom_from_name("t0") is Axiom.T0
    assert axiom_from_name("T2.5") is Axiom.T2_HALF
    assert axiom_from_name("t3.5") is Axiom.T3_HALF
    assert axiom_from_name("ed") is Axiom.EXTREMALLY_DISCONNECTED
    assert axiom_from_name("completely-normal") is Axiom.COMPLETELY_NORMAL
    with pytest.raises(ValueError):
        axiom_from_name("T9")


def test_sierpinski_direct_verdicts(sierpinski):
    table = classify_space(sierpinski)
    assert {a.value: v for a, v in table.items()} == SIERPINSKI_TABLE


def test_antidiscrete_direct_verdicts(antidiscrete2):
    table = classify_space(antidiscrete2)
    assert {a.value: v for a, v in table.items()} == ANTIDISCRETE_TABLE


def test_discrete_pair_satisfies_everything(discrete2):
    assert all(classify_space(discrete2).values())
    assert all(lifting_classification(discrete2).values())


def test_lifting_verdicts_match_tables(sierpinski, antidiscrete2):
    for space, table in [
        (sierpinski, SIERPINSKI_TABLE),
        (antidiscrete2, ANTIDISCRETE_TABLE),
    ]:
        lifting = lifting_classification(space)
        for axiom, verdict in lifting.items():
            if axiom in SOFT_AXIOMS:
                continue
            assert verdict == table[axiom.value], axiom


def test_vee_space_documented_verdicts():
    vee = parse_space("{a>x,b>x}")
    table = classify_space(vee)
    assert table[Axiom.T0] and table[Axiom.TD]
    assert not table[Axiom.REGULAR]
    assert table[Axiom.NORMAL]
    assert not table[Axiom.PERFECTLY_NORMAL]


def test_predicates_on_sierpinski(sierpinski):
    s = sierpinski
    assert distinguishable(s, 0, 1)
    assert not distinguishable(s, 0, 0)
    a, b = 0b01, 0b10
    assert not separated(s, a, b)  # b lies in the closure of a
    assert separated(s, a, 0)
    assert separated_by_neighbourhoods(s, a, 0)
    assert not separated_by_neighbourhoods(s, a, b)


def test_predicates_on_discrete_pair(discrete2):
    s = discrete2
    a, b = 0b01, 0b10
    assert separated(s, a, b)
    assert separated_by_neighbourhoods(s, a, b)
    assert separated_by_closed_neighbourhoods(s, a, b)
    assert separated_by_function(s, a, b)
    assert precisely_separated_by_function(s, a, b)
    assert not precisely_separated_by_function(s, a, a)


def test_function_separation_follows_components():
    zigzag = parse_space("{a>x,b>x}")
    assert not separated_by_function(zigzag, 0b001, 0b010)  # one component
    two = parse_space("{a>b,c>d}")
    assert separated_by_function(two, 0b0011, 0b1100)
    assert precisely_separated_by_function(two, 0b0011, 0b1100)
    assert not precisely_separated_by_function(two, 0b0001, 0b1100)


@given(space_with_two_subsets(max_n=4))
def test_strength_chain_is_monotone(sab):
    space, a, b = sab
    assert strength_chain_holds(space, a, b)


def test_point_separation_ladder(small_census):
    # separated points are distinguishable; distinguishable points are distinct
    for n, spaces_n in small_census.items():
        for space in spaces_n:
            for x in range(space.n):
                for y in range(space.n):
                    if separated(space, 1 << x, 1 << y):
                        assert distinguishable(space, x, y)
                    if distinguishable(space, x, y):
                        assert x != y


def test_neighbourhood_separation_matches_factorization(small_census):
    target = parse_space("{A<->x<->B}")
    q = parse_map("{A<->U_A>x<U_B<->B} -> {A<->U_A=x=U_B<->B}")
    assert q.cod == target
    for n in range(4):
        for space in small_census[n]:
            size = 1 << space.n
            for a in range(size):
                for b in range(size):
                    if a & b:
                        continue
                    f = tuple(
                        0 if (1 << x) & a else 2 if (1 << x) & b else 1
                        for x in range(space.n)
                    )
                    i = check_continuous(space, target, f)
                    factor = find_factorization(i, q)
                    assert (factor is not None) == separated_by_neighbourhoods(
                        space, a, b
                    )
                    if factor is not None:
                        assert compose(q, factor).f == i.f


def test_formula_fixture_is_complete_and_parseable():
    rows = load_formulas()
    for axiom in Axiom:
        if axiom in DIRECT_ONLY or axiom in COMPOSITES:
            assert axiom.value not in rows
        else:
            assert axiom.value in rows
    for row in rows.values():
        assert row.left_kind in {"fixed", "injections-2pt", "points", "empty"}
        assert row.right_kind in {"to-point", "fixed", "real-line"}
        if row.left_kind == "fixed":
            parse_map(row.left)
        if row.right_kind == "fixed":
            parse_map(row.right)
        if row.right_kind == "real-line":
            assert row.right  # names an interval model


def test_r1_has_no_diagram_formulation(sierpinski):
    with pytest.raises(ValueError):
        check_axiom_lifting(sierpinski, Axiom.R1)


def test_composite_axioms_are_conjunctions(small_census):
    for n in range(4):
        for space in small_census[n]:
            table = classify_space(space)
            for comp, parts in COMPOSITES.items():
                assert table[comp] == all(table[p] for p in parts)
                lifted = check_axiom_lifting(space, comp)
                assert lifted.holds == all(
                    check_axiom_lifting(space, p).holds for p in parts
                )


def test_interval_model_verdicts(sierpinski, antidiscrete2, discrete2):
    assert check_axiom_lifting(discrete2, Axiom.COMPLETELY_T2).holds
    res = check_axiom_lifting(sierpinski, Axiom.COMPLETELY_T2)
    assert not res.holds
    assert "a" in res.witness and "b" in res.witness
    assert check_axiom_lifting(antidiscrete2, Axiom.COMPLETELY_REGULAR).holds
    assert check_axiom_lifting(sierpinski, Axiom.NORMAL_URYSOHN).holds
    perf = check_axiom_lifting(sierpinski, Axiom.PERFECTLY_NORMAL)
    assert not perf.holds and "{b}" in perf.witness


def test_interval_model_witnesses_are_deterministic(sierpinski):
    first = check_axiom_lifting(sierpinski, Axiom.PERFECTLY_NORMAL)
    second = check_axiom_lifting(sierpinski, Axiom.PERFECTLY_NORMAL)
    assert first.witness == second.witness


def test_alternate_extremal_disconnectedness_row_agrees():
    rows = load_formulas()
    main = rows["EXTREMALLY_DISCONNECTED"]
    alt = rows["EXTREMALLY_DISCONNECTED_ALT"]
    for n in range(4):
        for space in enumerate_topologies(n):
            assert check_formula(space, main).holds == check_formula(space, alt).holds


def test_lifting_counterexample_attached_for_finite_formulas(sierpinski):
    res = check_axiom_lifting(sierpinski, Axiom.T1)
    assert not res.holds
    assert res.witness is not None
    assert res.witness.commutes()
    anti = parse_space("{x<->y}")
    res0 = check_axiom_lifting(anti, Axiom.T0)
    assert not res0.holds and res0.witness.commutes()


def test_direct_accepts_string_names(sierpinski):
    assert check_axiom_direct(sierpinski, "T0") is True
    assert check_axiom_lifting(sierpinski, "T0").holds is True
