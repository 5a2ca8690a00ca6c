"""Finite two-ring contexts: rings, bimodules, pairings, and their ideal theory.

Everything is a lookup table over index sets 0..n-1, so every question —
is this subset an ideal, is it prime, what is the radical — is decided by
finite enumeration and checked against independent routes where possible.
"""

from .catalog import BUILTIN_PATTERNS, battery_names, builtin_context, builtin_document
from .checks import CHECK_TOKENS, CheckResult, run_check
from .context import (
    ClosureSets,
    ContextElement,
    ContextPrimeReport,
    ContextSemiprimeReport,
    IdealQuadruple,
    MoritaContext,
    OneSidedDecomposition,
    QuadruplePrimeReport,
    QuadrupleSemiprimeReport,
    RadicalQuadruple,
    build_context_ring,
    build_ks_context,
    check_prime_quadruple,
    check_semiprime_quadruple,
    closure_sets,
    context_prime_radical,
    decompose_ideal,
    enumerate_context_ideals,
    is_prime_context,
    is_prime_onesided_ideal,
    is_semiprime_context,
    is_surjective_context,
    product_span_vw,
    product_span_wv,
    quadruple_conditions,
    quadruple_mask,
    quotient_context,
    side_decomposition,
    validate_context,
    verify_quotient_iso,
)
from .errors import (
    AlgebraError,
    CapacityError,
    CentralityError,
    InconsistencyError,
    InvalidOrderError,
    MalformedTableError,
    MctxError,
    NotAnIdealError,
    NotASubmoduleError,
    NotProperError,
    UnknownBuiltinError,
    ValidationFailedError,
    WellDefinednessError,
)
from .ideals import (
    Ideal,
    check_ideal,
    confirm_prime_witness,
    confirm_semiprime_witness,
    enumerate_ideals,
    ideal_product_mask,
    is_nilpotent_ideal,
    is_prime_ideal,
    is_prime_ideal_pairwise,
    is_prime_ring,
    is_semiprime_ideal,
    is_semiprime_ideal_pairwise,
    is_semiprime_ring,
    prime_radical,
    prime_spectrum,
    principal_ideal,
    verify_ideal,
)
from .mctx import (
    ContextDocument,
    ResolvedContext,
    load_mctx,
    parse_mctx,
    resolve_document,
    serialize_document,
)
from .modules import (
    Bimodule,
    ModuleView,
    Submodule,
    annihilator,
    confirm_prime_submodule_witness,
    cyclic_submodule,
    enumerate_submodules,
    is_prime_submodule,
    quotient_module,
    quotient_view,
    residue_bimodule,
    ring_bimodule,
    subset_bimodule,
    validate_bimodule,
    verify_submodule,
    zero_bimodule,
)
from .rings import (
    FiniteRing,
    RingElement,
    RingMap,
    make_zn,
    quotient_ring,
    ring_from_tables,
    validate_ring,
    verify_ring_map,
)
from .validation import ValidationReport, Verdict, Violation

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # rings
    "FiniteRing", "RingElement", "RingMap", "make_zn", "ring_from_tables",
    "validate_ring", "quotient_ring", "verify_ring_map",
    # modules
    "Bimodule", "ModuleView", "Submodule", "ring_bimodule", "subset_bimodule",
    "residue_bimodule", "zero_bimodule", "validate_bimodule", "verify_submodule",
    "cyclic_submodule", "enumerate_submodules", "is_prime_submodule",
    "confirm_prime_submodule_witness", "annihilator", "quotient_view", "quotient_module",
    # ideals
    "Ideal", "check_ideal", "verify_ideal", "principal_ideal", "enumerate_ideals",
    "is_prime_ideal", "is_semiprime_ideal", "confirm_prime_witness",
    "confirm_semiprime_witness", "ideal_product_mask", "is_prime_ideal_pairwise",
    "is_semiprime_ideal_pairwise", "prime_spectrum", "prime_radical",
    "is_prime_ring", "is_semiprime_ring", "is_nilpotent_ideal",
    # contexts
    "MoritaContext", "ContextElement", "IdealQuadruple", "RadicalQuadruple",
    "ClosureSets", "OneSidedDecomposition", "QuadruplePrimeReport",
    "QuadrupleSemiprimeReport", "ContextPrimeReport", "ContextSemiprimeReport",
    "validate_context", "build_context_ring", "build_ks_context",
    "quadruple_mask", "quadruple_conditions", "enumerate_context_ideals",
    "decompose_ideal", "side_decomposition", "is_prime_onesided_ideal",
    "closure_sets", "check_prime_quadruple", "check_semiprime_quadruple",
    "context_prime_radical", "quotient_context", "verify_quotient_iso",
    "is_prime_context", "is_semiprime_context", "is_surjective_context",
    "product_span_vw", "product_span_wv",
    # documents and catalog
    "ContextDocument", "ResolvedContext", "parse_mctx", "serialize_document",
    "resolve_document", "load_mctx", "builtin_document", "builtin_context",
    "battery_names", "BUILTIN_PATTERNS",
    # checks
    "CHECK_TOKENS", "CheckResult", "run_check",
    # validation and errors
    "Verdict", "Violation", "ValidationReport",
    "AlgebraError", "MalformedTableError", "InvalidOrderError",
    "ValidationFailedError", "NotAnIdealError", "NotASubmoduleError",
    "NotProperError", "CapacityError", "CentralityError", "WellDefinednessError",
    "InconsistencyError", "UnknownBuiltinError", "MctxError",
]
