"""Exact computation and certification of vector fields on spheres over R, C, H.

The package computes the maximal numbers of linearly independent vector
fields on unit spheres in R^n, C^n and H^n by several independent exact
routes, verifies the valuation formulas and cross-field relations behind
them, and constructs and certifies explicit linear vector fields.  No
floating point enters any computation or certificate.
"""

from .algebra import (
    ComplexScalar,
    FVector,
    IDENTITIES,
    QuatScalar,
    alpha,
    apply_map,
    conj,
    identity_check,
    inner,
    quat_mul,
    run_identity_trials,
)
from .exactmath import (
    FactoredInteger,
    factorize,
    floor_log_ratio,
    is_prime,
    nu,
    prime_prefix_length,
    primes_up_to,
)
from .fields import (
    FieldCertificate,
    FieldFamily,
    LinearField,
    PromotionReport,
    SpherePoint,
    as_real_family,
    default_points,
    example4,
    family_from_json,
    family_to_json,
    gram_schmidt,
    hurwitz_radon_check,
    is_vector_field,
    lift,
    promotes_to,
    sampled_independence,
    stereographic_point,
    structure_matrix,
    unit_float_rendering,
)
from .james import (
    Field,
    JamesProfile,
    ScanRange,
    divides,
    f_adams,
    find_refinement_mismatch,
    nu_full,
    nu_refined,
    profile,
    scan_range,
)
from .rho import (
    GapRecord,
    GapSweepReport,
    RelationReport,
    RhoResult,
    find_direct_oracle_mismatch,
    gap_delta,
    gap_sweep,
    relation_check,
    rho,
    rho_direct,
    rho_oracle,
    rho_real_adams,
)

__version__ = "0.1.0"
