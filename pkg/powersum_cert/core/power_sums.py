#!/usr/bin/env python3
"""
Power Sums Module

Closed-form polynomial extensions of power sums over arithmetic progressions

    S(n)  = b^k + (a+b)^k + ... + (a(n-1)+b)^k
    T(n)  = b^k - (a+b)^k + ... + (-1)^(n-1) (a(n-1)+b)^k

together with literal-summation oracles used to validate them.

Author: powersum-cert Development Team
License: Apache License 2.0
"""

from fractions import Fraction

from .classical_polys import bernoulli_poly, euler_poly
from .data_structures import PowerSumFamily, ProgressionParams
from .exceptions import ParameterError
from .polynomial import Poly


def _check_terms(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParameterError("number of terms n must be a positive integer", parameter="n", value=n)
    return n


def build_S(params: ProgressionParams) -> Poly:
    """
    S(x) = a^k/(k+1) * (B_{k+1}(x + b/a) - B_{k+1}(b/a))

    Degree k+1, constant term 0.

    Raises:
        ParameterError: k < 1
    """
    if params.k < 1:
        raise ParameterError("S family requires k >= 1", parameter="k", value=params.k)
    k, ratio = params.k, params.ratio
    bernoulli = bernoulli_poly(k + 1)
    shifted = bernoulli.compose_linear(1, ratio) - bernoulli.eval(ratio)
    return shifted.scale(Fraction(params.a ** k, k + 1))


def build_T(params: ProgressionParams, sign: PowerSumFamily) -> Poly:
    """
    T+(x) = a^k/2 * (E_k(b/a) + E_k(x + b/a))
    T-(x) = a^k/2 * (E_k(b/a) - E_k(x + b/a))

    T+ agrees with the alternating sum at odd n, T- at even n.
    """
    sign = PowerSumFamily.from_label(sign)
    if not sign.is_alternating:
        raise ParameterError("build_T needs T+ or T-", parameter="sign", value=sign.value)
    k, ratio = params.k, params.ratio
    euler = euler_poly(k)
    shifted = euler.compose_linear(1, ratio).scale(sign.sign)
    return (shifted + euler.eval(ratio)).scale(Fraction(params.a ** k, 2))


def build_family(family: PowerSumFamily, params: ProgressionParams) -> Poly:
    """Family polynomial for S, T+ or T-"""
    family = PowerSumFamily.from_label(family)
    if family is PowerSumFamily.S:
        return build_S(params)
    return build_T(params, family)


def direct_power_sum(params: ProgressionParams, n: int) -> Fraction:
    """sum_{i<n} (a*i + b)^k by literal summation"""
    _check_terms(n)
    a, b, k = params.a, params.b, params.k
    return Fraction(sum((a * i + b) ** k for i in range(n)))


def direct_alt_power_sum(params: ProgressionParams, n: int) -> Fraction:
    """sum_{i<n} (-1)^i (a*i + b)^k by literal summation"""
    _check_terms(n)
    a, b, k = params.a, params.b, params.k
    return Fraction(sum((-1) ** i * (a * i + b) ** k for i in range(n)))


def alt_power_sum_value(params: ProgressionParams, n: int) -> Fraction:
    """
    Alternating sum with n terms from the closed form

    a^k/2 * (E_k(b/a) + (-1)^(n-1) E_k(n + b/a)), i.e. T+ at odd n and T- at even n.
    """
    _check_terms(n)
    family = PowerSumFamily.T_PLUS if n % 2 == 1 else PowerSumFamily.T_MINUS
    return build_T(params, family).eval(n)

