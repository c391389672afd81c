"""Exact and Monte Carlo computations on finite permutation groups.

The package covers insolubility probabilities for alternating groups and
their wreath products, exhaustive checks of permutation counting lemmas,
finite-field fixed-point counts, totient statistics and solubilizer ratios.
"""

__version__ = "0.1.0"

from .perm import Permutation, compose, cycle_decomposition, invert, parity
from .group import BlockSystem, GroupHandle, blocks_action, minimal_block_system, orbits
from .analysis import contains_alternating, derived_subgroup, is_soluble, is_transitive, normal_closure
from .constructions import (
    NormalChain,
    WreathElement,
    alternating_group,
    construct,
    direct_power,
    symmetric_group,
    wreath_product,
)
from .insolubility import (
    CosetSpec,
    alt_coset,
    eta_exact,
    pins_exact,
    pins_montecarlo,
    two_coset_generation_check,
    wreath_pins_montecarlo,
)
from .solubilizer import ccent_check, crucial_bound_check, solubilizer_set, t_centralizer_count
from .stats import Estimate, wilson_interval

__all__ = [
    "BlockSystem",
    "CosetSpec",
    "Estimate",
    "GroupHandle",
    "NormalChain",
    "Permutation",
    "WreathElement",
    "alt_coset",
    "alternating_group",
    "blocks_action",
    "ccent_check",
    "compose",
    "construct",
    "contains_alternating",
    "crucial_bound_check",
    "cycle_decomposition",
    "derived_subgroup",
    "direct_power",
    "eta_exact",
    "invert",
    "is_soluble",
    "is_transitive",
    "minimal_block_system",
    "normal_closure",
    "orbits",
    "parity",
    "pins_exact",
    "pins_montecarlo",
    "solubilizer_set",
    "symmetric_group",
    "t_centralizer_count",
    "two_coset_generation_check",
    "wilson_interval",
    "wreath_pins_montecarlo",
    "wreath_product",
]
