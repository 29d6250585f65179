#!/usr/bin/env python3
"""
Root Structure Module

Root-multiplicity analytics over Q and desk-scale checks of the root
structure of Bernoulli and Euler polynomials.

Every count is taken over C from degree sums of the squarefree
decomposition, so no numerical root isolation is involved.

Author: powersum-cert Development Team
License: Apache License 2.0
"""

from fractions import Fraction
from functools import partial
from math import gcd
from typing import Iterable, List, Optional, Sequence

from ..core.classical_polys import bernoulli_poly, euler_poly
from ..core.constants import (
    DEFAULT_BASE_SHIFTS,
    DEFAULT_COPRIME_PRIMES,
    DEFAULT_CRITICAL_POINTS,
    LEMMA4_EXCLUDED_K,
    LEMMA4_MIN_K,
    LEMMA5_MIN_K,
)
from ..core.data_structures import LemmaRecord, RootStructureReport, Verdict
from ..core.exceptions import DomainError, HypothesisError, ParameterError
from ..core.polynomial import (
    Poly,
    SquarefreeDecomposition,
    poly_divmod,
    rational_roots,
    squarefree_decompose,
)
from ..core.rational import RationalLike, to_rational
from ..utils.logger import get_logger
from ..utils.parallel import ordered_map

# x^2 - x - 1, the only admissible multiple factor of an Euler polynomial
GOLDEN_QUADRATIC = Poly((-1, -1, 1))

_X_SQUARED_MINUS_X = Poly((0, -1, 1))


def report_from_decomposition(decomposition: SquarefreeDecomposition,
                              primes: Iterable[int] = DEFAULT_COPRIME_PRIMES,
                              multiple_factor: Optional[Poly] = None) -> RootStructureReport:
    """Root counts read off an existing squarefree decomposition"""
    parts = [(multiplicity, int(factor.degree)) for factor, multiplicity in decomposition.parts]
    distinct = sum(degree for _, degree in parts)
    odd = sum(degree for multiplicity, degree in parts if multiplicity % 2 == 1)
    simple = sum(degree for multiplicity, degree in parts if multiplicity == 1)
    coprime_counts = {
        ell: sum(degree for multiplicity, degree in parts if gcd(multiplicity, ell) == 1)
        for ell in primes
    }
    return RootStructureReport(
        distinct_roots=distinct,
        odd_multiplicity_roots=odd,
        simple_roots=simple,
        coprime_counts=coprime_counts,
        multiple_factor=multiple_factor,
        multiplicity_profile=tuple(parts),
    )


def analyze_roots(p: Poly, primes: Iterable[int] = DEFAULT_COPRIME_PRIMES) -> RootStructureReport:
    """
    Root structure of p over C

    Args:
        p: polynomial of degree >= 1
        primes: ell values for the coprime multiplicity counts

    Raises:
        DomainError: p is constant
    """
    if p.is_constant:
        raise DomainError("root structure of a constant polynomial", operation="analyze_roots")
    decomposition = squarefree_decompose(p)
    # monic gcd(p, p') = prod f_i^(i-1)
    multiple_factor = Poly.constant(1)
    for factor, multiplicity in decomposition.parts:
        if multiplicity > 1:
            multiple_factor = multiple_factor * factor ** (multiplicity - 1)
    if multiple_factor.is_constant:
        multiple_factor = None
    return report_from_decomposition(decomposition, primes, multiple_factor)


def _as_polynomial_in_x2_minus_x(m: Poly) -> Optional[Poly]:
    """n with m(x) = n(x^2 - x), or None when m is not of that form"""
    coeffs: List[Fraction] = []
    remaining = m
    while not remaining.is_zero:
        remaining, remainder = poly_divmod(remaining, _X_SQUARED_MINUS_X)
        if not remainder.is_constant:
            return None
        coeffs.append(remainder.constant_term)
    return Poly(tuple(coeffs))


def is_product_of_odd_beta_quadratics(m: Poly) -> bool:
    """
    True when monic m is a product of factors x^2 - x - beta, beta odd positive integers

    Such m is invariant under x -> 1 - x, hence m(x) = n(x^2 - x); the test
    asks n to split into linear factors y - beta with admissible beta.
    """
    if m.is_constant:
        return True
    if int(m.degree) % 2 == 1:
        return False
    n = _as_polynomial_in_x2_minus_x(m.monic())
    if n is None:
        return False
    roots = rational_roots(n)
    if sum(multiplicity for _, multiplicity in roots) != n.degree:
        return False
    return all(
        beta.denominator == 1 and beta > 0 and beta.numerator % 2 == 1
        for beta, _ in roots
    )


def _gcd_record(lemma: str, k: int, polynomial: Poly, shape_ok) -> LemmaRecord:
    report = analyze_roots(polynomial)
    m = report.multiple_factor
    passed = m is None or (shape_ok(m) and report.max_multiplicity <= 2)
    return LemmaRecord(
        lemma=lemma,
        k=k,
        verdict=Verdict.of(passed),
        counts={
            "distinct_roots": report.distinct_roots,
            "max_multiplicity": report.max_multiplicity,
        },
        multiple_factor=m,
    )


def _lemma3_record(k: int) -> LemmaRecord:
    if k % 2 == 1:
        return _gcd_record("3", k, bernoulli_poly(k), lambda m: False)
    return _gcd_record("3", k, bernoulli_poly(k), is_product_of_odd_beta_quadratics)


def _lemma6_record(k: int) -> LemmaRecord:
    if k % 2 == 0:
        return _gcd_record("6", k, euler_poly(k), lambda m: False)
    return _gcd_record("6", k, euler_poly(k), lambda m: m == GOLDEN_QUADRATIC)


def _check_k_max(k_max: int):
    if isinstance(k_max, bool) or not isinstance(k_max, int) or k_max < 1:
        raise ParameterError("k_max must be a positive integer", parameter="k_max", value=k_max)


def _log_records(records: Sequence[LemmaRecord]):
    logger = get_logger()
    for record in records:
        logger.log_lemma_record(record.lemma, record.k, record.verdict.value,
                                shift=record.shift, **record.counts)


def check_lemma3(k_max: int, workers: int = 1) -> List[LemmaRecord]:
    """
    Multiple factors of B_k for 1 <= k <= k_max

    PASS iff gcd(B_k, B_k') is constant for odd k, and for even k is either
    constant or a product of x^2 - x - beta (beta odd positive) with no root
    of multiplicity above 2.
    """
    _check_k_max(k_max)
    records = ordered_map(_lemma3_record, range(1, k_max + 1), workers=workers)
    _log_records(records)
    return records


def check_lemma6(k_max: int, workers: int = 1) -> List[LemmaRecord]:
    """
    Multiple factors of E_k for 1 <= k <= k_max

    PASS iff gcd(E_k, E_k') is constant for even k, and for odd k is constant
    or exactly x^2 - x - 1 with no root of multiplicity above 2.
    """
    _check_k_max(k_max)
    records = ordered_map(_lemma6_record, range(1, k_max + 1), workers=workers)
    _log_records(records)
    return records


def default_shifts(family: str, k: int,
                   base_shifts: Optional[Iterable[RationalLike]] = None,
                   critical_points: Optional[Iterable[RationalLike]] = None) -> List[Fraction]:
    """
    Shift sample set: base shifts plus critical values -P_k(q)

    Args:
        family: 'bernoulli' or 'euler'
        k: index of P_k
        base_shifts: defaults to 0, +-1/2, +-1, +-1/3
        critical_points: q values, defaults to 0, 1/4, 1/3, 1/2, 2
    """
    if family == "bernoulli":
        polynomial = bernoulli_poly(k)
    elif family == "euler":
        polynomial = euler_poly(k)
    else:
        raise ParameterError(f"unknown polynomial family {family!r}", parameter="family", value=family)

    base = [to_rational(s) for s in (base_shifts if base_shifts is not None else DEFAULT_BASE_SHIFTS)]
    points = critical_points if critical_points is not None else DEFAULT_CRITICAL_POINTS
    shifts: List[Fraction] = []
    for s in base + [-polynomial.eval(q) for q in points]:
        if s not in shifts:
            shifts.append(s)
    return shifts


def _odd_count_record(k: int, s: Fraction) -> LemmaRecord:
    report = analyze_roots(bernoulli_poly(k) + s)
    return LemmaRecord(
        lemma="4",
        k=k,
        verdict=Verdict.of(report.odd_multiplicity_roots >= 3),
        shift=s,
        counts={"odd_multiplicity_roots": report.odd_multiplicity_roots},
    )


def _simple_count_record(k: int, z: Fraction) -> LemmaRecord:
    report = analyze_roots(euler_poly(k) + z)
    return LemmaRecord(
        lemma="5",
        k=k,
        verdict=Verdict.of(report.simple_roots >= 3),
        shift=z,
        counts={"simple_roots": report.simple_roots},
    )


def check_lemma4(k: int, shifts: Optional[Iterable[RationalLike]] = None,
                 workers: int = 1) -> List[LemmaRecord]:
    """
    B_k(x) + s has at least three roots of odd multiplicity, per sampled s

    Raises:
        HypothesisError: k < 3 or k in {4, 6}
    """
    if k < LEMMA4_MIN_K or k in LEMMA4_EXCLUDED_K:
        raise HypothesisError(f"odd-multiplicity check needs k >= 3 and k not in {{4, 6}}, got {k}",
                              lemma="4", k=k)
    values = [to_rational(s) for s in shifts] if shifts is not None else default_shifts("bernoulli", k)
    records = ordered_map(partial(_odd_count_record, k), values, workers=workers)
    _log_records(records)
    return records


def check_lemma5_rational(k: int, shifts: Optional[Iterable[RationalLike]] = None,
                          workers: int = 1) -> List[LemmaRecord]:
    """
    E_k(x) + z has at least three simple roots, per sampled rational z

    Only the rational slice of z in C is covered.

    Raises:
        HypothesisError: k < 7
    """
    if k < LEMMA5_MIN_K:
        raise HypothesisError(f"simple-root check needs k >= 7, got {k}", lemma="5", k=k)
    values = [to_rational(z) for z in shifts] if shifts is not None else default_shifts("euler", k)
    records = ordered_map(partial(_simple_count_record, k), values, workers=workers)
    _log_records(records)
    return records
