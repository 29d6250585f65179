#!/usr/bin/env python3
"""
powersum-cert Analytics Module

Root-structure checks, proof reductions with finiteness certificates and
bounded Diophantine search.

Author: powersum-cert Development Team
License: Apache License 2.0
"""

from .root_structure import (
    analyze_roots,
    check_lemma3,
    check_lemma4,
    check_lemma5_rational,
    check_lemma6,
    default_shifts,
)
from .reduction import (
    reduce_quadratic,
    reduce_power,
    certify,
    certify_grid,
    coprime_pairs,
    contradiction_probe_S,
    contradiction_probe_T,
)
from .dioph_search import (
    integer_nth_root,
    solve_quadratic_rhs,
    solve_power_rhs,
    solve,
    check_solution,
)

__all__ = [
    "analyze_roots",
    "check_lemma3",
    "check_lemma4",
    "check_lemma5_rational",
    "check_lemma6",
    "default_shifts",
    "reduce_quadratic",
    "reduce_power",
    "certify",
    "certify_grid",
    "coprime_pairs",
    "contradiction_probe_S",
    "contradiction_probe_T",
    "integer_nth_root",
    "solve_quadratic_rhs",
    "solve_power_rhs",
    "solve",
    "check_solution",
]
