#!/usr/bin/env python3
"""
Classical Polynomials Module

Exact Bernoulli numbers and polynomials B_k(x) and Euler polynomials E_k(x).

Both families are Appell sequences (P_n' = n P_{n-1}), so each polynomial is
rebuilt from its value at zero:

    P_n(x) = sum_j C(n, j) P_j(0) x^(n-j)

The values at zero come from the binomial recurrences

    sum_{j<=n} C(n+1, j) B_j = 0              (B_1 = -1/2)
    E_n(0) = -1/2 * sum_{j<n} C(n, j) E_j(0)

Author: powersum-cert Development Team
License: Apache License 2.0
"""

import threading
from fractions import Fraction
from math import comb
from typing import List, Optional

from .constants import DEFAULT_MAX_K
from .exceptions import ParameterError
from .polynomial import Poly


def _appell_poly(values_at_zero: List[Fraction], n: int) -> Poly:
    coeffs = [Fraction(0)] * (n + 1)
    for j in range(n + 1):
        coeffs[n - j] = comb(n, j) * values_at_zero[j]
    return Poly(tuple(coeffs))


def _check_index(k: int, name: str = "k") -> int:
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise ParameterError(f"{name} must be a nonnegative integer", parameter=name, value=k)
    return k


class _AppellTable:
    """Lock-protected cache of an Appell family that grows on demand"""

    def __init__(self, max_k: int = DEFAULT_MAX_K):
        self._lock = threading.Lock()
        self._values: List[Fraction] = [Fraction(1)]
        self._polys: List[Poly] = [Poly.constant(1)]
        self.extend(_check_index(max_k, "max_k"))

    def _next_value(self, n: int) -> Fraction:
        raise NotImplementedError

    @property
    def max_k(self) -> int:
        return len(self._polys) - 1

    def extend(self, k: int):
        """Make sure every index up to k is cached"""
        if k <= self.max_k:
            return
        with self._lock:
            for n in range(len(self._polys), k + 1):
                self._values.append(self._next_value(n))
                self._polys.append(_appell_poly(self._values, n))

    def poly(self, k: int) -> Poly:
        _check_index(k)
        self.extend(k)
        return self._polys[k]

    def value_at_zero(self, k: int) -> Fraction:
        _check_index(k)
        self.extend(k)
        return self._values[k]


class BernoulliTable(_AppellTable):
    """
    Bernoulli numbers B_0..B_max_k and polynomials B_0(x)..B_max_k(x)

    B_k = B_k(0), deg B_k(x) = k, leading coefficient 1.
    """

    def _next_value(self, n: int) -> Fraction:
        total = sum(comb(n + 1, j) * self._values[j] for j in range(n))
        return -total / (n + 1)

    def number(self, k: int) -> Fraction:
        return self.value_at_zero(k)


class EulerTable(_AppellTable):
    """Euler polynomials E_0(x)..E_max_k(x), monic of degree k"""

    def _next_value(self, n: int) -> Fraction:
        total = sum(comb(n, j) * self._values[j] for j in range(n))
        return -total / 2


_tables_lock = threading.Lock()
_bernoulli_table: Optional[BernoulliTable] = None
_euler_table: Optional[EulerTable] = None


def get_bernoulli_table() -> BernoulliTable:
    """Shared Bernoulli table"""
    global _bernoulli_table
    with _tables_lock:
        if _bernoulli_table is None:
            _bernoulli_table = BernoulliTable()
        return _bernoulli_table


def get_euler_table() -> EulerTable:
    """Shared Euler table"""
    global _euler_table
    with _tables_lock:
        if _euler_table is None:
            _euler_table = EulerTable()
        return _euler_table


def configure_tables(max_k: int = DEFAULT_MAX_K):
    """Build both shared tables eagerly up to max_k"""
    get_bernoulli_table().extend(_check_index(max_k, "max_k"))
    get_euler_table().extend(max_k)


def bernoulli_poly(k: int) -> Poly:
    """B_k(x)"""
    return get_bernoulli_table().poly(k)


def bernoulli_number(k: int) -> Fraction:
    """B_k = B_k(0), with B_1 = -1/2"""
    return get_bernoulli_table().number(k)


def euler_poly(k: int) -> Poly:
    """E_k(x)"""
    return get_euler_table().poly(k)


def euler_number_at_zero(k: int) -> Fraction:
    """E_k(0)"""
    return get_euler_table().value_at_zero(k)


def classical_power_sum_poly(k: int) -> Poly:
    """
    S_k(x) = 0^k + 1^k + ... + (x-1)^k as a polynomial

    Equals (B_{k+1}(x) - B_{k+1}) / (k+1).
    """
    _check_index(k)
    shifted = bernoulli_poly(k + 1) - bernoulli_number(k + 1)
    return shifted.scale(Fraction(1, k + 1))


def classical_alt_power_sum(k: int, n: int) -> Fraction:
    """T_k(n) = sum_{i<n} (-1)^i i^k = (E_k(0) + (-1)^(n-1) E_k(n)) / 2"""
    _check_index(k)
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParameterError("n must be a positive integer", parameter="n", value=n)
    sign = 1 if n % 2 == 1 else -1
    return (euler_number_at_zero(k) + sign * euler_poly(k).eval(n)) / 2
