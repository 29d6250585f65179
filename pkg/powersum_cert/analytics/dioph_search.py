#!/usr/bin/env python3
"""
Diophantine Search Module

Exact bounded enumeration of integer solutions of

    family_poly(x) = A*y^2 + B*y + C        (quadratic right-hand side)
    family_poly(x) = c*y^ell + d            (power right-hand side)

The x-range is split into contiguous chunks that are scanned independently
and merged in ascending order.

Author: powersum-cert Development Team
License: Apache License 2.0
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import List, Optional, Tuple

from ..core.constants import DEFAULT_CHUNK_SIZE
from ..core.data_structures import (
    RHS,
    PowerRHS,
    PowerSumFamily,
    ProgressionParams,
    QuadraticRHS,
    SearchBox,
    Solution,
)
from ..core.exceptions import ParameterError
from ..core.power_sums import build_family
from ..utils.logger import get_logger
from ..utils.parallel import CancelToken, chunk_ranges, ordered_map


def integer_nth_root(v: int, n: int) -> Tuple[int, bool]:
    """
    floor(v^(1/n)) and whether it is exact

    Integer Newton iteration from above; no floating point.

    Raises:
        ParameterError: v < 0 or n < 1
    """
    if v < 0:
        raise ParameterError("radicand must be nonnegative", parameter="v", value=v)
    if n < 1:
        raise ParameterError("root index must be positive", parameter="n", value=n)
    if v < 2 or n == 1:
        return v, True
    if n == 2:
        root = math.isqrt(v)
        return root, root * root == v

    x = 1 << (v.bit_length() // n + 1)
    while True:
        y = ((n - 1) * x + v // x ** (n - 1)) // n
        if y >= x:
            break
        x = y
    return x, x ** n == v


def _rational_sqrt(value: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None"""
    if value < 0:
        return None
    num, num_exact = integer_nth_root(value.numerator, 2)
    den, den_exact = integer_nth_root(value.denominator, 2)
    if not (num_exact and den_exact):
        return None
    return Fraction(num, den)


@dataclass(frozen=True)
class _ScanPlan:
    """Everything a chunk worker needs; picklable"""

    family: PowerSumFamily
    params: ProgressionParams
    rhs: RHS
    content: Fraction
    int_coeffs: Tuple[int, ...]
    filter_small_y: bool
    ells: Tuple[int, ...]

    def lhs(self, x: int) -> Fraction:
        value = 0
        for c in reversed(self.int_coeffs):
            value = value * x + c
        return self.content * value


def _quadratic_ys(rhs: QuadraticRHS, v: Fraction) -> List[int]:
    disc = rhs.B * rhs.B - 4 * rhs.A * (rhs.C - v)
    root = _rational_sqrt(disc)
    if root is None:
        return []
    ys = set()
    for candidate in ((-rhs.B + root) / (2 * rhs.A), (-rhs.B - root) / (2 * rhs.A)):
        if candidate.denominator == 1:
            ys.add(candidate.numerator)
    return sorted(ys)


def _power_ys(v: int, ell: int) -> List[int]:
    if v >= 0:
        root, exact = integer_nth_root(v, ell)
        if not exact:
            return []
        if ell % 2 == 0 and root != 0:
            return [-root, root]
        return [root]
    if ell % 2 == 0:
        return []
    root, exact = integer_nth_root(-v, ell)
    return [-root] if exact else []


def _scan_chunk(plan: _ScanPlan, bounds: Tuple[int, int]) -> List[Solution]:
    lo, hi = bounds
    found: List[Solution] = []
    for x in range(lo, hi):
        lhs = plan.lhs(x)
        if isinstance(plan.rhs, QuadraticRHS):
            for y in _quadratic_ys(plan.rhs, lhs):
                if plan.filter_small_y and abs(y) <= 1:
                    continue
                found.append(Solution(x, y, plan.family, lhs, None, plan.params))
            continue

        v = (lhs - plan.rhs.d) / plan.rhs.c
        if v.denominator != 1:
            continue
        for ell in plan.ells:
            for y in _power_ys(v.numerator, ell):
                if plan.filter_small_y and abs(y) <= 1:
                    continue
                found.append(Solution(x, y, plan.family, lhs, ell, plan.params))
    return found


def _run_scan(plan: _ScanPlan, box: SearchBox, workers: int, chunk_size: int,
              cancel: Optional[CancelToken]) -> List[Solution]:
    logger = get_logger()
    chunks = chunk_ranges(box.x_min, box.x_max, chunk_size)
    logger.debug("Starting scan", family=plan.family.value, x_min=box.x_min, x_max=box.x_max,
                 chunks=len(chunks), workers=workers)

    def on_chunk(index: int, bounds: Tuple[int, int], result: List[Solution]):
        logger.log_search_chunk(index, bounds[0], bounds[1] - 1, len(result))

    per_chunk = ordered_map(partial(_scan_chunk, plan), chunks, workers=workers,
                            cancel=cancel, on_result=on_chunk)
    solutions = [solution for chunk in per_chunk for solution in chunk]
    return sorted(solutions, key=lambda s: s.sort_key)


def _plan(family: PowerSumFamily, params: ProgressionParams, rhs: RHS,
          filter_small_y: bool, ells: Tuple[int, ...]) -> _ScanPlan:
    poly = build_family(family, params)
    content, ints = poly.primitive()
    return _ScanPlan(family, params, rhs, content, tuple(ints), filter_small_y, ells)


def solve_quadratic_rhs(family: PowerSumFamily, params: ProgressionParams, rhs: QuadraticRHS,
                        box: SearchBox, workers: int = 1,
                        chunk_size: int = DEFAULT_CHUNK_SIZE,
                        cancel: Optional[CancelToken] = None) -> List[Solution]:
    """
    All (x, y) in the box with family_poly(x) = A*y^2 + B*y + C

    y = (-B +- sqrt(disc)) / 2A with disc = B^2 - 4A(C - v) a rational
    square; both roots are reported. The |y| > 1 filter is off unless the
    box asks for it.
    """
    family = PowerSumFamily.from_label(family)
    if not isinstance(rhs, QuadraticRHS):
        raise ParameterError("solve_quadratic_rhs needs a quadratic right-hand side", parameter="rhs")
    plan = _plan(family, params, rhs, box.filters_small_y(power_rhs=False), ())
    return _run_scan(plan, box, workers, chunk_size, cancel)


def solve_power_rhs(family: PowerSumFamily, params: ProgressionParams, rhs: PowerRHS,
                    box: SearchBox, workers: int = 1,
                    chunk_size: int = DEFAULT_CHUNK_SIZE,
                    cancel: Optional[CancelToken] = None) -> List[Solution]:
    """
    All (x, ell, y) in the box with family_poly(x) = c*y^ell + d

    An unknown exponent is tried over 2..box.ell_max. Negative values of
    (family_poly(x) - d)/c only admit odd ell. The |y| > 1 filter is on
    unless the box turns it off.
    """
    family = PowerSumFamily.from_label(family)
    if not isinstance(rhs, PowerRHS):
        raise ParameterError("solve_power_rhs needs a power right-hand side", parameter="rhs")
    ells = (rhs.ell,) if rhs.ell is not None else tuple(range(2, box.ell_max + 1))
    plan = _plan(family, params, rhs, box.filters_small_y(power_rhs=True), ells)
    return _run_scan(plan, box, workers, chunk_size, cancel)


def solve(family: PowerSumFamily, params: ProgressionParams, rhs: RHS, box: SearchBox,
          workers: int = 1, chunk_size: int = DEFAULT_CHUNK_SIZE,
          cancel: Optional[CancelToken] = None) -> List[Solution]:
    """Dispatch on the right-hand side kind"""
    if isinstance(rhs, QuadraticRHS):
        return solve_quadratic_rhs(family, params, rhs, box, workers, chunk_size, cancel)
    return solve_power_rhs(family, params, rhs, box, workers, chunk_size, cancel)


def check_solution(solution: Solution, rhs: RHS) -> bool:
    """Substitute back into the closed form"""
    if solution.params is None:
        raise ParameterError("solution carries no progression", parameter="params")
    lhs = build_family(solution.family, solution.params).eval(solution.x)
    if isinstance(rhs, QuadraticRHS):
        return lhs == rhs.eval(solution.y)
    return lhs == rhs.eval(solution.y, solution.ell)
