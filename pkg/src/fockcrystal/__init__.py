"""Crystals of Fock spaces, symbols, e-periods and the associated branching rules."""
from .crystal import (
    CrystalGraph,
    canonical_charge,
    e_tilde,
    eps_phi,
    equivalent,
    f_tilde,
    generate_crystal,
    i_word,
    is_highest_weight,
    reduced_i_word,
    reduced_word_from_symbol,
    weight_aff,
    weight_inf,
)
from .decomposition import (
    DecomposedWeight,
    LevelZeroWeight,
    SkewTableau,
    count_M,
    count_m,
    decompose_weight,
    hw_symbol_to_tableau,
    is_totally_periodic_tableau,
    kostka,
    lambda_mu_of,
    level_parts,
    tableau_peel,
    tableau_to_hw_symbol,
    tableau_weight,
)
from .multipartition import INFINITY, FockError, Multipartition, Node, parse_charge, parse_multipartition
from .symbol import (
    InconsistencyError,
    Symbol,
    find_period,
    is_semistandard,
    is_totally_periodic,
    is_totally_periodic_inf,
    peel,
    reduce_charge,
    remove_period,
)
from .weights import WeightAff, WeightInf, project_weight

__version__ = "0.1.0"
