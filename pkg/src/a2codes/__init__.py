"""Authentication codes with arbitration from pseudo-symplectic geometry.

Build a code instance over GF(2^e), then audit it: every set size,
containment count and deception probability the construction promises is
recomputed here by exhaustive enumeration and exact arithmetic.
"""

from .field import GF2e, default_modulus, is_irreducible
from .linalg import (
    Subspace,
    contains,
    full_subspace,
    rank_of,
    rref,
    span,
    subset,
    subspace_intersect,
    subspace_sum,
    unit_vector,
    zero_subspace,
)
from .geometry import PsSpace, SubspaceType, build_space, classify, gram, perp
from .enumeration import (
    OracleBudgetError,
    ensure_anzahl_gate,
    gaussian_binomial,
    subspaces_between,
    subspaces_typed,
    symplectic_anzahl,
    symplectic_anzahl_bruteforce,
)
from .construction import (
    REJECT,
    CodeInstance,
    CodeParams,
    build_code,
    canonical_frame,
    code_to_json,
    decode,
    encode,
    incidence,
    parameter_notes,
    transmitter_rule_family,
    validate_params,
)
from .attacks import (
    AttackReport,
    IncidenceTables,
    attack_probabilities,
    verify_incidence_counts,
    verify_parameters,
    verify_shared_rule_pairs,
)

__all__ = [
    "GF2e",
    "default_modulus",
    "is_irreducible",
    "Subspace",
    "contains",
    "full_subspace",
    "rank_of",
    "rref",
    "span",
    "subset",
    "subspace_intersect",
    "subspace_sum",
    "unit_vector",
    "zero_subspace",
    "PsSpace",
    "SubspaceType",
    "build_space",
    "classify",
    "gram",
    "perp",
    "OracleBudgetError",
    "ensure_anzahl_gate",
    "gaussian_binomial",
    "subspaces_between",
    "subspaces_typed",
    "symplectic_anzahl",
    "symplectic_anzahl_bruteforce",
    "REJECT",
    "CodeInstance",
    "CodeParams",
    "build_code",
    "canonical_frame",
    "code_to_json",
    "decode",
    "encode",
    "incidence",
    "parameter_notes",
    "transmitter_rule_family",
    "validate_params",
    "AttackReport",
    "IncidenceTables",
    "attack_probabilities",
    "verify_incidence_counts",
    "verify_parameters",
    "verify_shared_rule_pairs",
]

__version__ = "0.1.0"
