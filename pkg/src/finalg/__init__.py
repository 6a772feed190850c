"""finalg: group rings over finite coefficient rings, ring-property
decision procedures with witnesses, and semisimple decomposition."""

from .groups import (
    FiniteGroup,
    direct_product,
    make_cyclic,
    make_dihedral,
    make_quaternion8,
)
from .rings import (
    FiniteRing,
    SubsetIdeal,
    center,
    direct_sum,
    is_division_ring,
    is_semisimple,
    jacobson_radical,
    make_gf,
    make_matrix_ring,
    make_zmod,
    nilpotents,
    units,
    validate_ideal,
)
from .groupring import (
    Annihilator,
    GroupRing,
    GroupRingElement,
    augmentation,
    gr_mul,
    involution,
    left_mul_matrix,
    right_annihilator,
    trace,
)
from .properties import (
    FAILS,
    HOLDS,
    UNKNOWN,
    AuditReport,
    Budget,
    PropertyVerdict,
    check_duo,
    check_reduced,
    check_reversible,
    check_si,
    check_symmetric,
    check_two_primal,
    evaluate_all_properties,
    implication_audit,
    replay_witness,
)
from .decompose import (
    Decomposition,
    central_idempotent_decomposition,
    verify_direct_sum_lemma,
    verify_factorwise_properties,
    verify_semisimple_equivalences,
)
from .exprs import ParseError, parse_group, parse_ring

__version__ = "0.1.0"

__all__ = [
    "Annihilator",
    "AuditReport",
    "Budget",
    "Decomposition",
    "FAILS",
    "FiniteGroup",
    "FiniteRing",
    "GroupRing",
    "GroupRingElement",
    "HOLDS",
    "ParseError",
    "PropertyVerdict",
    "SubsetIdeal",
    "UNKNOWN",
    "augmentation",
    "center",
    "central_idempotent_decomposition",
    "check_duo",
    "check_reduced",
    "check_reversible",
    "check_si",
    "check_symmetric",
    "check_two_primal",
    "direct_product",
    "direct_sum",
    "evaluate_all_properties",
    "gr_mul",
    "implication_audit",
    "involution",
    "is_division_ring",
    "is_semisimple",
    "jacobson_radical",
    "left_mul_matrix",
    "make_cyclic",
    "make_dihedral",
    "make_gf",
    "make_matrix_ring",
    "make_quaternion8",
    "make_zmod",
    "nilpotents",
    "parse_group",
    "parse_ring",
    "replay_witness",
    "right_annihilator",
    "trace",
    "units",
    "validate_ideal",
    "verify_direct_sum_lemma",
    "verify_factorwise_properties",
    "verify_semisimple_equivalences",
]
