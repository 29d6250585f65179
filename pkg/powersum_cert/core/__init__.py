#!/usr/bin/env python3
"""
powersum-cert Core Module

Exact rationals, polynomials over Q, Bernoulli/Euler tables, power-sum
polynomials, shared records and configuration.

Author: powersum-cert Development Team
License: Apache License 2.0
"""

from .rational import Rational, parse_rational, format_rational, rational_height
from .polynomial import (
    Poly,
    SquarefreeDecomposition,
    poly_eval,
    poly_derivative,
    poly_compose_linear,
    poly_divmod,
    poly_gcd,
    squarefree_decompose,
    rational_roots,
    poly_height,
    parse_poly,
    format_poly,
)
from .classical_polys import (
    BernoulliTable,
    EulerTable,
    bernoulli_poly,
    bernoulli_number,
    euler_poly,
    euler_number_at_zero,
    classical_power_sum_poly,
    classical_alt_power_sum,
)
from .data_structures import (
    PowerSumFamily,
    ProgressionParams,
    QuadraticRHS,
    PowerRHS,
    SearchBox,
    Solution,
    RootStructureReport,
    LemmaRecord,
    HypothesisCheck,
    ShiftConstants,
    FinitenessCertificate,
    ProbeReport,
    Verdict,
    CertificateVerdict,
)
from .power_sums import (
    build_S,
    build_T,
    build_family,
    direct_power_sum,
    direct_alt_power_sum,
    alt_power_sum_value,
)
from .engine_config import EngineConfig

__all__ = [
    "Rational",
    "parse_rational",
    "format_rational",
    "rational_height",
    "Poly",
    "SquarefreeDecomposition",
    "poly_eval",
    "poly_derivative",
    "poly_compose_linear",
    "poly_divmod",
    "poly_gcd",
    "squarefree_decompose",
    "rational_roots",
    "poly_height",
    "parse_poly",
    "format_poly",
    "BernoulliTable",
    "EulerTable",
    "bernoulli_poly",
    "bernoulli_number",
    "euler_poly",
    "euler_number_at_zero",
    "classical_power_sum_poly",
    "classical_alt_power_sum",
    "PowerSumFamily",
    "ProgressionParams",
    "QuadraticRHS",
    "PowerRHS",
    "SearchBox",
    "Solution",
    "RootStructureReport",
    "LemmaRecord",
    "HypothesisCheck",
    "ShiftConstants",
    "FinitenessCertificate",
    "ProbeReport",
    "Verdict",
    "CertificateVerdict",
    "build_S",
    "build_T",
    "build_family",
    "direct_power_sum",
    "direct_alt_power_sum",
    "alt_power_sum_value",
    "EngineConfig",
]
