#!/usr/bin/env python3
"""
Reduction Module

Turns an equation "power-sum polynomial = right-hand side in y" into the
reduced polynomial whose root structure decides effective finiteness, checks
that root structure, and records the outcome as a FinitenessCertificate.

Theorem ids:
    1, 2, 3   S, T+, T- against a quadratic A*y^2 + B*y + C
    4, 5, 6   S, T+, T- against a power c*y^ell + d

Author: powersum-cert Development Team
License: Apache License 2.0
"""

from fractions import Fraction
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

from ..core.classical_polys import bernoulli_poly, euler_poly
from ..core.constants import (
    DEFAULT_COPRIME_PRIMES,
    PROBE_T_FORBIDDEN_MULTIPLICITY,
    PROBE_T_MIN_K,
    SCHAFFER_EXCEPTIONAL_PAIRS,
    THEOREM_K_RANGES,
)
from ..core.data_structures import (
    RHS,
    CertificateVerdict,
    FinitenessCertificate,
    HypothesisCheck,
    PowerRHS,
    PowerSumFamily,
    ProbeReport,
    ProgressionParams,
    QuadraticRHS,
    RootStructureReport,
    ShiftConstants,
    Verdict,
)
from ..core.exceptions import HypothesisError, ParameterError
from ..core.polynomial import Poly, poly_gcd, poly_height, rational_roots
from ..core.power_sums import build_family
from ..core.rational import RationalLike, rational_height, to_rational
from ..utils.logger import get_logger
from ..utils.parallel import ordered_map
from .root_structure import GOLDEN_QUADRATIC, analyze_roots

_QUADRATIC_THEOREMS = {
    PowerSumFamily.S: 1,
    PowerSumFamily.T_PLUS: 2,
    PowerSumFamily.T_MINUS: 3,
}
_POWER_THEOREMS = {
    PowerSumFamily.S: 4,
    PowerSumFamily.T_PLUS: 5,
    PowerSumFamily.T_MINUS: 6,
}


def theorem_for(family: PowerSumFamily, rhs: RHS) -> int:
    """Theorem id for a family / right-hand side kind"""
    family = PowerSumFamily.from_label(family)
    table = _QUADRATIC_THEOREMS if isinstance(rhs, QuadraticRHS) else _POWER_THEOREMS
    return table[family]


def family_for_theorem(theorem_id: int) -> Tuple[PowerSumFamily, bool]:
    """(family, quadratic right-hand side?) for a theorem id"""
    for table, quadratic in ((_QUADRATIC_THEOREMS, True), (_POWER_THEOREMS, False)):
        for family, tid in table.items():
            if tid == theorem_id:
                return family, quadratic
    raise ParameterError(f"theorem id must be 1..6, got {theorem_id}", parameter="theorem",
                         value=theorem_id)


def in_theorem_range(theorem_id: int, k: int) -> bool:
    min_k, excluded = THEOREM_K_RANGES[theorem_id]
    return k >= min_k and k not in excluded


def prime_factors(n: int) -> List[int]:
    """Distinct prime divisors in ascending order"""
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            factors.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        factors.append(n)
    return factors


def _report(p: Poly, primes: Iterable[int]) -> RootStructureReport:
    if p.is_constant:
        return RootStructureReport(0, 0, 0, {ell: 0 for ell in primes})
    return analyze_roots(p, primes)


def _family_poly(family: PowerSumFamily, params: ProgressionParams) -> Optional[Poly]:
    if family is PowerSumFamily.S and params.k < 1:
        return None
    return build_family(family, params)


def _shift(family: PowerSumFamily, params: ProgressionParams, constant: Fraction) -> Fraction:
    """
    s in the normal form of family_poly + constant

        S:   a^k/(k+1) * (B_{k+1}(x + b/a) + s)
        T+-: +-a^k/2 * (E_k(x + b/a) + s)
    """
    k, ratio, a_k = params.k, params.ratio, Fraction(params.a) ** params.k
    if family is PowerSumFamily.S:
        return -bernoulli_poly(k + 1).eval(ratio) + (k + 1) * constant / a_k
    return family.sign * (euler_poly(k).eval(ratio) + 2 * constant / a_k)


def _schaffer_notes(family: PowerSumFamily, params: ProgressionParams,
                    exponents: Sequence[int]) -> Tuple[str, ...]:
    if family is not PowerSumFamily.S or not params.is_classical:
        return ()
    return tuple(
        f"(k, n) = ({params.k}, {n}) is an exceptional pair of S_k(x) = y^n"
        for n in exponents
        if (params.k, n) in SCHAFFER_EXCEPTIONAL_PAIRS
    )


def _odd_roots_check(report: RootStructureReport, lemma_id: str = "2") -> HypothesisCheck:
    return HypothesisCheck(
        lemma_id=lemma_id,
        claim="at least three roots of odd multiplicity",
        witness={"odd_multiplicity_roots": report.odd_multiplicity_roots},
        verdict=Verdict.of(report.odd_multiplicity_roots >= 3),
    )


def _finish(theorem_id: int, family: PowerSumFamily, params: ProgressionParams, rhs: RHS,
            reduced: Poly, shifts: ShiftConstants, checks: List[HypothesisCheck],
            notes: Tuple[str, ...]) -> FinitenessCertificate:
    if not in_theorem_range(theorem_id, params.k):
        verdict = CertificateVerdict.OUT_OF_THEOREM_RANGE
    elif checks and all(check.passed for check in checks):
        verdict = CertificateVerdict.CERTIFIED
    else:
        verdict = CertificateVerdict.HYPOTHESIS_VIOLATED

    certificate = FinitenessCertificate(
        theorem_id=theorem_id,
        family=family,
        params=params,
        rhs=rhs,
        reduced_poly=reduced,
        shift_constants=shifts,
        hypothesis_checks=tuple(checks),
        verdict=verdict,
        degree=int(reduced.degree) if not reduced.is_zero else 0,
        naive_height=poly_height(reduced),
        shift_height=rational_height(shifts.s) if shifts.s is not None else None,
        notes=notes,
    )
    get_logger().log_certificate(theorem_id, params.k, params.a, params.b, verdict.value)
    return certificate


def reduce_quadratic(family: PowerSumFamily, params: ProgressionParams, rhs: QuadraticRHS,
                     primes: Iterable[int] = DEFAULT_COPRIME_PRIMES) -> FinitenessCertificate:
    """
    Certificate for family_poly(x) = A*y^2 + B*y + C

    Completing the square gives family_poly(x) + nu = A*(y + mu)^2 with
    mu = B/2A and nu = (B^2 - 4AC)/4A; the reduced polynomial is
    P = family_poly + nu. S needs three odd-multiplicity roots of P, T+-
    needs three simple roots (and hence three odd-multiplicity roots).
    A k outside the theorem's range yields OUT_OF_THEOREM_RANGE.
    """
    family = PowerSumFamily.from_label(family)
    if not isinstance(rhs, QuadraticRHS):
        raise ParameterError("reduce_quadratic needs a quadratic right-hand side", parameter="rhs")
    primes = list(primes)
    theorem_id = _QUADRATIC_THEOREMS[family]
    notes = _schaffer_notes(family, params, [2])

    f = _family_poly(family, params)
    if f is None:
        return _finish(theorem_id, family, params, rhs, Poly.zero(),
                       ShiftConstants(mu=rhs.mu, nu=rhs.nu), [], notes)

    nu = rhs.nu
    reduced = f + nu
    shifts = ShiftConstants(mu=rhs.mu, nu=nu, s=_shift(family, params, nu))
    report = _report(reduced, primes)

    checks = []
    if family.is_alternating:
        checks.append(HypothesisCheck(
            lemma_id="5",
            claim="at least three simple roots",
            witness={"simple_roots": report.simple_roots},
            verdict=Verdict.of(report.simple_roots >= 3),
        ))
    checks.append(_odd_roots_check(report))
    return _finish(theorem_id, family, params, rhs, reduced, shifts, checks, notes)


def reduce_power(family: PowerSumFamily, params: ProgressionParams, rhs: PowerRHS,
                 primes: Iterable[int] = DEFAULT_COPRIME_PRIMES) -> FinitenessCertificate:
    """
    Certificate for family_poly(x) = c*y^ell + d

    The reduced polynomial is P = family_poly - d.
    H1: P has two distinct roots, which bounds ell.
    H2 (ell known): for every prime q dividing ell, q = 2 needs three roots
    of odd multiplicity and odd q needs two roots of multiplicity coprime to q.
    """
    family = PowerSumFamily.from_label(family)
    if not isinstance(rhs, PowerRHS):
        raise ParameterError("reduce_power needs a power right-hand side", parameter="rhs")
    theorem_id = _POWER_THEOREMS[family]
    ell_primes = prime_factors(rhs.ell) if rhs.ell is not None else []
    primes = sorted(set(primes) | set(ell_primes))
    exponents = [rhs.ell] if rhs.ell is not None else [n for (_, n) in SCHAFFER_EXCEPTIONAL_PAIRS]
    notes = _schaffer_notes(family, params, sorted(set(exponents)))

    f = _family_poly(family, params)
    if f is None:
        return _finish(theorem_id, family, params, rhs, Poly.zero(), ShiftConstants(), [], notes)

    reduced = f - rhs.d
    shifts = ShiftConstants(s=_shift(family, params, -rhs.d))
    report = _report(reduced, primes)

    checks = [HypothesisCheck(
        lemma_id="1",
        claim="at least two distinct roots",
        witness={"distinct_roots": report.distinct_roots},
        verdict=Verdict.of(report.distinct_roots >= 2),
    )]
    for q in ell_primes:
        if q == 2:
            checks.append(_odd_roots_check(report))
        else:
            coprime = report.coprime_counts.get(q, 0)
            checks.append(HypothesisCheck(
                lemma_id="2",
                claim=f"at least two roots of multiplicity coprime to {q}",
                witness={f"coprime_roots_{q}": coprime},
                verdict=Verdict.of(coprime >= 2),
            ))
    return _finish(theorem_id, family, params, rhs, reduced, shifts, checks, notes)


def certify(theorem_id: int, params: ProgressionParams, rhs: RHS,
            primes: Iterable[int] = DEFAULT_COPRIME_PRIMES) -> FinitenessCertificate:
    """Dispatch on theorem id"""
    family, quadratic = family_for_theorem(theorem_id)
    if quadratic != isinstance(rhs, QuadraticRHS):
        kind = "quadratic" if quadratic else "power"
        raise ParameterError(f"theorem {theorem_id} needs a {kind} right-hand side",
                             parameter="rhs")
    if quadratic:
        return reduce_quadratic(family, params, rhs, primes)
    return reduce_power(family, params, rhs, primes)


def _certify_task(task: Tuple[int, int, int, int, RHS, Tuple[int, ...]]) -> FinitenessCertificate:
    theorem_id, a, b, k, rhs, primes = task
    return certify(theorem_id, ProgressionParams(a, b, k), rhs, primes)


def certify_grid(theorem_id: int, ks: Iterable[int], pairs: Iterable[Tuple[int, int]],
                 rhs_list: Iterable[RHS], primes: Iterable[int] = DEFAULT_COPRIME_PRIMES,
                 workers: int = 1) -> List[FinitenessCertificate]:
    """
    Certificates over a parameter grid

    Output is ordered by (theorem_id, k, a, b), then by position in rhs_list.
    """
    family_for_theorem(theorem_id)
    primes = tuple(primes)
    rhs_items = list(rhs_list)
    tasks = [
        (theorem_id, a, b, k, rhs, primes)
        for k in sorted(set(ks))
        for a, b in sorted(set(pairs))
        for rhs in rhs_items
    ]
    return ordered_map(_certify_task, tasks, workers=workers)


def coprime_pairs(bound: int) -> List[Tuple[int, int]]:
    """All (a, b) with a != 0, gcd(a, b) = 1 and |a|, |b| <= bound"""
    return [
        (a, b)
        for a in range(-bound, bound + 1)
        for b in range(-bound, bound + 1)
        if a != 0 and gcd(a, b) == 1
    ]


# ---------------------------------------------------------------------------
# Contradiction probes
# ---------------------------------------------------------------------------

def _multiple_factor(p: Poly) -> Optional[Poly]:
    m = poly_gcd(p, p.derivative())
    return None if m.is_constant else m


def contradiction_probe_S(params: ProgressionParams, d: RationalLike) -> ProbeReport:
    """
    Rule out S(x) - d = R*(U*x + V)^(k+1)

    That shape forces the derivative a^k * B_k(x + b/a) to have a rational
    root of multiplicity k. PASS when the derivative identity holds, no
    rational root reaches multiplicity k, and S(x) - d has two distinct roots.

    Raises:
        HypothesisError: k < 2
    """
    if params.k < 2:
        raise HypothesisError(f"S probe needs k >= 2, got {params.k}", lemma="probe_S", k=params.k)
    d = to_rational(d)
    k, ratio = params.k, params.ratio
    f = build_family(PowerSumFamily.S, params)
    derivative = f.derivative()
    expected = bernoulli_poly(k).compose_linear(1, ratio).scale(Fraction(params.a) ** k)
    identity_ok = derivative == expected

    roots = tuple(rational_roots(derivative))
    target = analyze_roots(f - d)
    m = _multiple_factor(derivative)
    m_unshifted = m.compose_linear(1, -ratio) if m is not None else None

    passed = (
        identity_ok
        and all(multiplicity < k for _, multiplicity in roots)
        and target.distinct_roots >= 2
    )
    notes = () if identity_ok else ("derivative does not match a^k * B_k(x + b/a)",)
    return ProbeReport(
        family=PowerSumFamily.S,
        params=params,
        d=d,
        derivative=derivative,
        rational_roots=roots,
        forbidden_multiplicity=k,
        multiple_factor=m_unshifted,
        target_distinct_roots=target.distinct_roots,
        verdict=Verdict.of(passed),
        notes=notes,
    )


def contradiction_probe_T(params: ProgressionParams, d: RationalLike,
                          sign: PowerSumFamily) -> ProbeReport:
    """
    Rule out the degenerate perfect-power shapes of T+-(x) - d

    The derivative is +-(k*a^k/2) * E_{k-1}(x + b/a). PASS when that identity
    holds, no rational root has multiplicity 6 or more, the multiple factor
    (in the unshifted variable) is at most (x^2 - x - 1)^2, and T+-(x) - d
    has two distinct roots.

    Raises:
        HypothesisError: k < 7
    """
    sign = PowerSumFamily.from_label(sign)
    if not sign.is_alternating:
        raise ParameterError("T probe needs T+ or T-", parameter="sign", value=sign.value)
    if params.k < PROBE_T_MIN_K:
        raise HypothesisError(f"T probe needs k >= 7, got {params.k}", lemma="probe_T", k=params.k)
    d = to_rational(d)
    k, ratio = params.k, params.ratio
    f = build_family(sign, params)
    derivative = f.derivative()
    expected = euler_poly(k - 1).compose_linear(1, ratio).scale(
        sign.sign * Fraction(k * params.a ** k, 2)
    )
    identity_ok = derivative == expected

    roots = tuple(rational_roots(derivative))
    target = analyze_roots(f - d)
    m = _multiple_factor(derivative)
    m_unshifted = m.compose_linear(1, -ratio) if m is not None else None
    structure = analyze_roots(derivative)

    factor_ok = m_unshifted is None or (
        m_unshifted == GOLDEN_QUADRATIC and structure.max_multiplicity <= 2
    )
    passed = (
        identity_ok
        and all(multiplicity < PROBE_T_FORBIDDEN_MULTIPLICITY for _, multiplicity in roots)
        and factor_ok
        and target.distinct_roots >= 2
    )
    notes = () if identity_ok else ("derivative does not match +-(k*a^k/2) * E_{k-1}(x + b/a)",)
    return ProbeReport(
        family=sign,
        params=params,
        d=d,
        derivative=derivative,
        rational_roots=roots,
        forbidden_multiplicity=PROBE_T_FORBIDDEN_MULTIPLICITY,
        multiple_factor=m_unshifted,
        target_distinct_roots=target.distinct_roots,
        verdict=Verdict.of(passed),
        notes=notes,
    )
