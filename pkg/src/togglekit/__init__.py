"""Toggle-group dynamics on rc-posets.

Rowmotion, promotion, gyration, and superpromotion on order ideals;
equivariant bijections to words, matchings, tableaux, noncrossing
partitions, and height functions; exact cyclic sieving checks.
"""

from .errors import TogglekitError
from .poset import (
    Poset,
    build_poset,
    distributive_lattice,
    enumerate_ideals,
    enumerate_linear_extensions,
    is_order_ideal,
    rowmotion_by_definition,
)
from .toggles import (
    OrbitPartition,
    RcPoset,
    apply_word,
    conjugator_word,
    gyration_word,
    orbits,
    promotion_word,
    rowmotion_word,
    superpromotion_word,
    toggle,
    toggle_action,
)
from .families import (
    asm_poset,
    chain_product,
    half_square,
    parse_family,
    root_poset,
    tsscpp_poset,
    two_row_interior,
)

__all__ = [
    "TogglekitError",
    "Poset",
    "RcPoset",
    "OrbitPartition",
    "build_poset",
    "distributive_lattice",
    "enumerate_ideals",
    "enumerate_linear_extensions",
    "is_order_ideal",
    "rowmotion_by_definition",
    "toggle",
    "apply_word",
    "toggle_action",
    "rowmotion_word",
    "promotion_word",
    "gyration_word",
    "superpromotion_word",
    "conjugator_word",
    "orbits",
    "chain_product",
    "root_poset",
    "two_row_interior",
    "half_square",
    "asm_poset",
    "tsscpp_poset",
    "parse_family",
]
