"""Covers of finite groups by proper subgroups.

Builds small finite groups from multiplication tables, permutation
generators, or presets; computes their subgroup lattices and chief
series; finds minimum covers and enumerates irredundant covers; and
decides which groups admit irredundant covers of only one size.
"""

from .arith import is_prime, prime_divisors
from .catalog import (
    CatalogEntry,
    PermSource,
    PresetSource,
    build_catalog,
    build_entry,
    bundled_catalog_text,
    parse_catalog,
)
from .classify import (
    AbelianCoverCheck,
    ClassificationAgreement,
    ClassificationOutcome,
    FamilyTag,
    PNilpotenceCheck,
    QuotientInvariantsCheck,
    check_abelian_sigma_cover,
    check_p_nilpotence,
    check_quotient_invariants,
    classify,
    verify_classification,
)
from .covers import (
    Cover,
    EnumerationStats,
    INFINITE,
    SigmaValue,
    cover_enumeration_stats,
    enumerate_irredundant_covers,
    frobenius_style_cover,
    irredundant_cover_sizes,
    is_cover,
    is_irredundant,
    lambda_,
    make_cover,
    maximal_cyclic_family,
    maximal_cyclic_pairs_generate,
    minimal_cover,
    one_sized_bruteforce,
    sigma_exact,
    sigma_tomkinson,
)
from .errors import (
    CatalogError,
    DuplicateName,
    EnumerationBoundExceeded,
    GroupCoversError,
    GroupIsCyclic,
    GroupValidationError,
    InvalidParameters,
    InvariantViolation,
    MalformedCycle,
    MissingInverse,
    NoFactorWithMultipleComplements,
    NoIdentityAtZero,
    NotAssociative,
    NotLatinSquare,
    NotNormal,
    NotProperSubgroup,
    NotSolvable,
    NotSubgroup,
    OrderBoundExceeded,
    OrderMismatch,
    ParseError,
    PreconditionViolation,
    PrimeDoesNotDivideOrder,
)
from .groups import (
    Group,
    Homomorphism,
    ORDER_BOUND,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    from_permutation_generators,
    generalized_quaternion,
    quotient,
    semidirect_cp_cn,
    symmetric,
    validate_group,
)
from .lattice import (
    ChiefFactor,
    CyclicSubgroup,
    Subgroup,
    all_subgroups,
    chief_series,
    cyclic_subgroups,
    frattini_subgroup,
    has_normal_p_complement,
    is_nilpotent,
    is_solvable,
    is_supersolvable,
    maximal_subgroups,
    minimal_normal_subgroups,
    normal_subgroups,
    sylow_subgroup,
)
from .reports import (
    CHECK_IDS,
    COMPLEMENT_COUNT_ASSUMPTION,
    DEFAULT_MAX_ORDER,
    AnalyzeOptions,
    VerificationReport,
    parse_report,
    run_analyze,
    run_check,
    run_verify_corpus,
    serialize_envelope,
    serialize_report,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
