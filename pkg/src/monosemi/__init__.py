"""Monotone convolution powers of the Wigner semicircle law.

Exact moments, cumulants, and orthogonal polynomials; combinatorial and
operator-model cross-checks; complex-analytic transforms, densities, and
support endpoints.  Every quantity is computable by at least two independent
routes, and the verification suites exercise the agreements.
"""

from .algebra import DensePolynomial, Rational, interpolate, rational_from_str, rational_to_str
from .fock import (
    check_monotone_independence,
    check_operator_identities,
    moment_via_fock,
    vacuum_expectation,
)
from .moments import (
    CumulantSequence,
    cumulant_comparison,
    moment,
    moment_polynomial,
    moments_general,
    moments_m2,
    monotone_cumulants,
    symmetric_moments,
)
from .orthopoly import (
    JacobiCoefficients,
    jacobi_from_moments,
    monic_orthogonal_polys,
    verify_orthogonality,
)
from .partitions import (
    PairPartition,
    catalan,
    count_nc2wmo,
    count_weakly_monotone_labelings,
    enumerate_nc2,
    nesting_forest,
    sign_string_to_partition,
)
from .transforms import (
    DensityEstimate,
    cauchy_power,
    cauchy_semicircle,
    density_m2_closed,
    density_numeric,
    endpoint_bounds_check,
    moment_quadrature,
    reciprocal_power,
    reciprocal_semicircle,
    semicircle_density,
    support_endpoint,
    zhukovsky,
)

__all__ = [
    "CumulantSequence",
    "DensePolynomial",
    "DensityEstimate",
    "JacobiCoefficients",
    "PairPartition",
    "Rational",
    "catalan",
    "cauchy_power",
    "cauchy_semicircle",
    "check_monotone_independence",
    "check_operator_identities",
    "count_nc2wmo",
    "count_weakly_monotone_labelings",
    "cumulant_comparison",
    "density_m2_closed",
    "density_numeric",
    "endpoint_bounds_check",
    "enumerate_nc2",
    "interpolate",
    "jacobi_from_moments",
    "moment",
    "moment_polynomial",
    "moment_quadrature",
    "moment_via_fock",
    "moments_general",
    "moments_m2",
    "monic_orthogonal_polys",
    "monotone_cumulants",
    "nesting_forest",
    "rational_from_str",
    "rational_to_str",
    "reciprocal_power",
    "reciprocal_semicircle",
    "semicircle_density",
    "sign_string_to_partition",
    "support_endpoint",
    "symmetric_moments",
    "vacuum_expectation",
    "verify_orthogonality",
    "zhukovsky",
]

__version__ = "0.1.0"
