"""Exact symbolic engine for bireversible vector fields.

Computes generator sets for the modules of reversible-equivariant
polynomial mappings under semidirect products of a continuous closure
group with two commuting reversing involutions, certifies them against a
brute-force degree-slice oracle, and assembles the truncated formal normal
forms.
"""

from .continuous import (
    InvolutionPair,
    LinearPart,
    SGroupData,
    SymmetryContext,
    catalog,
    classify_type,
    enumerate_involution_pairs,
    infinitesimal_check,
    linear_part_for_case,
    structure_of_S,
)
from .errors import (
    CertificationFailure,
    ConditionViolated,
    ConfigError,
    DimensionError,
    EngineError,
    IncompatibleMatrix,
    NotAHomomorphism,
    OrderExceeded,
    ResourceLimit,
    SignInconsistency,
    UncertifiedInput,
    UnsupportedCase,
)
from .group import (
    FiniteSignedGroup,
    GroupContext,
    SemidirectSpec,
    SignedElement,
    anticommute_check,
    check_semidirect_condition,
    close_group,
    membership,
    product_sigma,
)
from .normalform import NormalForm, assemble, emit, parse_normal_form
from .oracle import (
    DegreeSlice,
    module_slice,
    slice_space,
    slice_space_naive,
    spans_equal,
)
from .poly import (
    GaussianRational,
    PolyMap,
    Polynomial,
    parse_polymap,
    parse_polynomial,
    render_polymap,
    render_polynomial,
)
from .symmetry_ops import (
    GeneratorSet,
    extend_hilbert_basis,
    generators_over_extension,
    pipeline,
    project_generators,
    reynolds_R,
    reynolds_S,
    simplify,
    transfer_T,
)

__version__ = "0.1.0"
