#!/usr/bin/env python3
"""
powersum-cert: Exact Power Sums and Finiteness Certificates

Exact power sums of arithmetic progressions, Bernoulli and Euler
polynomials, root-structure checks, finiteness certificates for the
associated Diophantine equations and bounded integer search.

Author: powersum-cert Development Team
License: Apache License 2.0
"""

import logging

# Version information
__version__ = "1.0.0"
__author__ = "powersum-cert Development Team"
__license__ = "Apache License 2.0"
__description__ = "Exact power sums of arithmetic progressions and finiteness certificates"

logging.getLogger("powersum_cert").addHandler(logging.NullHandler())

# Core imports
from .core.polynomial import (  # noqa: E402
    Poly,
    SquarefreeDecomposition,
    poly_gcd,
    squarefree_decompose,
    rational_roots,
    poly_height,
    parse_poly,
    format_poly,
)
from .core.classical_polys import bernoulli_poly, bernoulli_number, euler_poly  # noqa: E402
from .core.power_sums import (  # noqa: E402
    build_S,
    build_T,
    build_family,
    direct_power_sum,
    direct_alt_power_sum,
)
from .core.engine_config import EngineConfig  # noqa: E402

# Data structures
from .core.data_structures import (  # noqa: E402
    PowerSumFamily,
    ProgressionParams,
    QuadraticRHS,
    PowerRHS,
    SearchBox,
    Solution,
    RootStructureReport,
    FinitenessCertificate,
    Verdict,
    CertificateVerdict,
)

# Analytics
from .analytics.root_structure import analyze_roots  # noqa: E402
from .analytics.reduction import (  # noqa: E402
    reduce_quadratic,
    reduce_power,
    contradiction_probe_S,
    contradiction_probe_T,
    certify_grid,
)
from .analytics.dioph_search import (  # noqa: E402
    integer_nth_root,
    solve_quadratic_rhs,
    solve_power_rhs,
)

# Utility imports
from .utils.logger import CertLogger, get_logger, configure_global_logger  # noqa: E402

# Exceptions
from .core.exceptions import (  # noqa: E402
    PowerSumCertError,
    ConfigurationError,
    ParameterError,
    DomainError,
    HypothesisError,
    PolyParseError,
    SearchCancelledError,
    get_error_code,
    format_exception_for_logging,
)

__all__ = [
    # Version info
    "__version__",
    "__author__",
    "__license__",
    "__description__",

    # Polynomials
    "Poly",
    "SquarefreeDecomposition",
    "poly_gcd",
    "squarefree_decompose",
    "rational_roots",
    "poly_height",
    "parse_poly",
    "format_poly",
    "bernoulli_poly",
    "bernoulli_number",
    "euler_poly",
    "build_S",
    "build_T",
    "build_family",
    "direct_power_sum",
    "direct_alt_power_sum",
    "EngineConfig",

    # Data structures
    "PowerSumFamily",
    "ProgressionParams",
    "QuadraticRHS",
    "PowerRHS",
    "SearchBox",
    "Solution",
    "RootStructureReport",
    "FinitenessCertificate",
    "Verdict",
    "CertificateVerdict",

    # Analytics
    "analyze_roots",
    "reduce_quadratic",
    "reduce_power",
    "contradiction_probe_S",
    "contradiction_probe_T",
    "certify_grid",
    "integer_nth_root",
    "solve_quadratic_rhs",
    "solve_power_rhs",

    # Utilities
    "CertLogger",
    "get_logger",
    "configure_global_logger",

    # Exceptions
    "PowerSumCertError",
    "ConfigurationError",
    "ParameterError",
    "DomainError",
    "HypothesisError",
    "PolyParseError",
    "SearchCancelledError",
    "get_error_code",
    "format_exception_for_logging",
]
