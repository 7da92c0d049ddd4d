"""Finite topological spaces, arrow notation, lifting problems, and
separation axioms checked two independent ways."""

from .spaces import (
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
from .notation import (
    NotationError,
    format_map,
    format_mask,
    format_space,
    parse,
    parse_map,
    parse_space,
)
from .maps import (
    ContinuityError,
    ContinuousMap,
    check_continuous,
    compose,
    constant_map,
    count_continuous_maps,
    empty_map_into,
    empty_space,
    enumerate_continuous_maps,
    find_continuous_map,
    find_factorization,
    identity_map,
    iter_continuous_maps,
    map_to_point,
    pair_injections,
    point_inclusion,
    point_inclusions,
    point_space,
)
from .lifting import (
    LiftingResult,
    Square,
    enumerate_commuting_squares,
    find_diagonal,
    has_lifting,
)
from .axioms import (
    COMPOSITES,
    DIRECT_ONLY,
    EQUIVALENCES,
    HARD_AXIOMS,
    IMPLICATIONS,
    SOFT_AXIOMS,
    STRENGTH_CHAIN,
    Axiom,
    FormulaRow,
    LiftingCheck,
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
from .census import (
    AxiomAgreement,
    EquivalenceReport,
    ImplicationReport,
    Mismatch,
    classify_space,
    count_by_axiom,
    count_topologies,
    enumerate_topologies,
    lifting_classification,
    run_equivalence_suite,
    run_implication_suite,
    run_strength_chain_suite,
    write_census,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
