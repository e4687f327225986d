"""Complex, antilinearly invariant deformations of root systems."""

from .deform import (
    AnsatzError,
    ConstraintReport,
    DeformMatrix,
    FactorizedElement,
    build_theta,
    deform_simple_roots,
    factorize,
    factorize_word,
    verify_constraints,
)
from .reduced import (
    ReducedRootSpace,
    check_invariance,
    deformed_space,
    reduced_orbit,
    reduced_root_space,
)
from .ring import GaussianRational, RingScalar
from .scan import CandidateClassification, classify, enumerate_candidates, scan
from .weyl import (
    NotFiniteTypeError,
    RootSystem,
    RootSystemError,
    WeylElement,
    build_root_system,
    compose,
    element_order,
    generate_all_roots,
    simple_reflection,
)

__version__ = "0.1.0"

__all__ = [
    "AnsatzError",
    "CandidateClassification",
    "ConstraintReport",
    "DeformMatrix",
    "FactorizedElement",
    "GaussianRational",
    "NotFiniteTypeError",
    "ReducedRootSpace",
    "RingScalar",
    "RootSystem",
    "RootSystemError",
    "WeylElement",
    "build_root_system",
    "build_theta",
    "check_invariance",
    "classify",
    "compose",
    "deform_simple_roots",
    "deformed_space",
    "element_order",
    "enumerate_candidates",
    "factorize",
    "factorize_word",
    "generate_all_roots",
    "reduced_orbit",
    "reduced_root_space",
    "scan",
    "simple_reflection",
    "verify_constraints",
]

