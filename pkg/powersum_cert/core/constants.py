#!/usr/bin/env python3
"""
Constants Module

Package-wide constants and default values for powersum-cert.

Author: powersum-cert Development Team
License: Apache License 2.0
"""

from typing import Dict, FrozenSet, List, Tuple

# Package Information
PACKAGE_NAME = "powersum-cert"
PACKAGE_VERSION = "1.0.0"
PACKAGE_DESCRIPTION = "Exact power sums of arithmetic progressions and finiteness certificates"
PACKAGE_AUTHOR = "powersum-cert Development Team"
PACKAGE_LICENSE = "Apache License 2.0"

# Classical polynomial tables
DEFAULT_MAX_K = 64

# Search engine
DEFAULT_CHUNK_SIZE = 4096
DEFAULT_ELL_MAX = 8
DEFAULT_WORKERS = 1

# Primes used for "multiplicity coprime to ell" counts
DEFAULT_COPRIME_PRIMES: List[int] = [2, 3, 5, 7]

# Default shift sample sets for the shifted Bernoulli / Euler checks
DEFAULT_BASE_SHIFTS: List[str] = ["0", "1/2", "-1/2", "1", "-1", "1/3", "-1/3"]
DEFAULT_CRITICAL_POINTS: List[str] = ["0", "1/4", "1/3", "1/2", "2"]

# Theorem ranges: theorem id -> (minimum k, excluded k values)
THEOREM_K_RANGES: Dict[int, Tuple[int, FrozenSet[int]]] = {
    1: (2, frozenset({3, 5})),
    2: (7, frozenset()),
    3: (7, frozenset()),
    4: (2, frozenset({3, 5})),
    5: (7, frozenset()),
    6: (7, frozenset()),
}

# Lemma preconditions
LEMMA4_MIN_K = 3
LEMMA4_EXCLUDED_K: FrozenSet[int] = frozenset({4, 6})
LEMMA5_MIN_K = 7
PROBE_T_MIN_K = 7

# Rational-root multiplicity that the alternating proofs rule out
PROBE_T_FORBIDDEN_MULTIPLICITY = 6

# Schaffer's exceptional (k, n) pairs for S_k(x) = y^n
SCHAFFER_EXCEPTIONAL_PAIRS: FrozenSet[Tuple[int, int]] = frozenset(
    {(1, 2), (3, 2), (3, 4), (5, 2)}
)

# Schaffer's nontrivial solution 1^2 + ... + 24^2 = 70^2, (k, n, x, y)
SCHAFFER_SOLUTION: Tuple[int, int, int, int] = (2, 2, 24, 70)

# Supported output and logging settings
OUTPUT_MODES = ["text", "json"]
LOG_FORMATS = ["simple", "structured", "json"]
LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
DEFAULT_LOG_LEVEL = "WARNING"
DEFAULT_LOG_FORMAT = "structured"

# Exit codes
EXIT_OK = 0
EXIT_USAGE_ERROR = 2

# Environment variable prefix for EngineConfig.from_environment
ENV_PREFIX = "POWERSUM_"

# Upper limit for the primes tried by the modular rational-root finder
ROOT_FINDER_PRIME_LIMIT = 20000
