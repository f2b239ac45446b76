"""Finite mereotopology: regular-closed-set algebras of finite topological
spaces, contact/covering axiom checking, and machine-verified relational
frame representations."""

from .algebra import (
    AxiomReport,
    AxiomViolation,
    CheckResult,
    ContactRelation,
    CoveringRelation,
    ExtendedContactAlgebra,
    FilterOrIdeal,
    FilterSeparation,
    FiniteBooleanAlgebra,
    TopologicalEca,
    all_filters,
    check_ca,
    check_eca,
    check_filter_separation_equivalence,
    check_relative_contact_laws,
    check_weca,
    check_weca_consequences,
    covering_document,
    covering_from_document,
    derived_contact,
    discrete_covering,
    eca_from_rc,
    internally_connected_algebraic,
    left_set,
    maximal_filters,
    principal_filter,
    relative_contact,
    right_set,
)
from .frames import (
    EquivalenceFrame1,
    EquivalenceFrame2,
    FrameAlgebra,
    ParametrizedFrame,
    frame1_covering,
    frame1_document,
    frame1_from_document,
    frame2_covering,
    frame2_document,
    frame2_from_document,
    frame2_internally_connected,
    gv_contact,
    pframe_antitone_audit,
    pframe_covering_antitone,
    pframe_covering_naive,
    powerset_eca,
    r1r2_class,
)
from .representations import (
    Embedding,
    SplitPullback,
    VerificationReport,
    WorldAtomPoint,
    build_parametrized_frame,
    build_type1,
    build_type2,
    check_split_pullback,
    covering_evaluator,
    find_admissible_splits,
    verification_document,
    verify_c_preservation,
    verify_embedding,
)
from .topology import (
    CapExceeded,
    DocumentError,
    FiniteTopology,
    IsomorphismCheck,
    LabeledTopology,
    PointSet,
    RegularClosedAlgebra,
    RegularOpenAlgebra,
    brute_force_regular_closed,
    closure,
    generate_topology,
    interior,
    is_regular_closed,
    is_regular_open,
    labeled_topology_from_document,
    rc_algebra,
    rc_contact,
    rc_covering,
    rc_internally_connected,
    rc_ro_isomorphism_check,
    ro_algebra,
    topology_document,
)

__all__ = [
    "AxiomReport",
    "AxiomViolation",
    "CapExceeded",
    "CheckResult",
    "ContactRelation",
    "CoveringRelation",
    "DocumentError",
    "Embedding",
    "EquivalenceFrame1",
    "EquivalenceFrame2",
    "ExtendedContactAlgebra",
    "FilterOrIdeal",
    "FilterSeparation",
    "FiniteBooleanAlgebra",
    "FiniteTopology",
    "FrameAlgebra",
    "IsomorphismCheck",
    "LabeledTopology",
    "ParametrizedFrame",
    "PointSet",
    "RegularClosedAlgebra",
    "RegularOpenAlgebra",
    "SplitPullback",
    "TopologicalEca",
    "VerificationReport",
    "WorldAtomPoint",
    "all_filters",
    "brute_force_regular_closed",
    "build_parametrized_frame",
    "build_type1",
    "build_type2",
    "check_ca",
    "check_eca",
    "check_filter_separation_equivalence",
    "check_relative_contact_laws",
    "check_split_pullback",
    "check_weca",
    "check_weca_consequences",
    "closure",
    "covering_document",
    "covering_evaluator",
    "covering_from_document",
    "derived_contact",
    "discrete_covering",
    "eca_from_rc",
    "find_admissible_splits",
    "frame1_covering",
    "frame1_document",
    "frame1_from_document",
    "frame2_covering",
    "frame2_document",
    "frame2_from_document",
    "frame2_internally_connected",
    "generate_topology",
    "gv_contact",
    "interior",
    "internally_connected_algebraic",
    "is_regular_closed",
    "is_regular_open",
    "labeled_topology_from_document",
    "left_set",
    "maximal_filters",
    "pframe_antitone_audit",
    "pframe_covering_antitone",
    "pframe_covering_naive",
    "powerset_eca",
    "principal_filter",
    "r1r2_class",
    "rc_algebra",
    "rc_contact",
    "rc_covering",
    "rc_internally_connected",
    "rc_ro_isomorphism_check",
    "relative_contact",
    "right_set",
    "ro_algebra",
    "topology_document",
    "verification_document",
    "verify_c_preservation",
    "verify_embedding",
]
