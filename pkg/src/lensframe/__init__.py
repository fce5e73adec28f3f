"""Framing invariants of odd-order lens spaces.

Computes the residue class mod p attached to L(p, q) via odd lifts of q and
q^-1, the equivalence relations it detects, connected-sum comparisons, and
the obstruction to universally tight positive contact structures on free
spherical quotients.
"""

from .classify import (
    FiberPartition,
    RelationKind,
    collision_scan,
    invariant_fibers,
    quadratic_roots,
    related,
    verify_prime_classification,
)
from .connectsum import SumOfLens, canonical_key, find_exotic_pairs, sums_equivalent
from .framing import (
    FramingClass,
    LensSpace,
    QuotientData,
    equivariant_map_degree,
    framing_invariant,
    framing_invariant_residue,
    framing_modulus,
    normalized_framing_invariant,
    universally_tight_obstructed,
)
from .modring import (
    Modulus,
    Residue,
    is_prime,
    is_square_unit,
    mod_inverse,
    normalize,
    odd_representative,
)
from .sweeps import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "FiberPartition",
    "FramingClass",
    "LensSpace",
    "Modulus",
    "QuotientData",
    "RelationKind",
    "Residue",
    "SumOfLens",
    "canonical_key",
    "collision_scan",
    "equivariant_map_degree",
    "find_exotic_pairs",
    "framing_invariant",
    "framing_invariant_residue",
    "framing_modulus",
    "invariant_fibers",
    "is_prime",
    "is_square_unit",
    "mod_inverse",
    "normalize",
    "normalized_framing_invariant",
    "odd_representative",
    "quadratic_roots",
    "related",
    "sums_equivalent",
    "universally_tight_obstructed",
    "verify_prime_classification",
]
