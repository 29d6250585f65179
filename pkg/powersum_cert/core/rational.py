#!/usr/bin/env python3
"""
Rational Scalars

Exact rational numbers for powersum-cert. ``fractions.Fraction`` already keeps
numerator and denominator reduced with a positive denominator, so it is used
directly as the coefficient field of every polynomial in the package.

Author: powersum-cert Development Team
License: Apache License 2.0
"""

import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Union

from .exceptions import PolyParseError, ParameterError

Rational = Fraction

RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def to_rational(value: RationalLike) -> Fraction:
    """
    Coerce an int, Fraction or ``p/q`` string to a Fraction

    Floats are rejected: every value in the package must be exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParameterError("booleans are not rational numbers", value=value)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ParameterError(
        f"cannot use {type(value).__name__} as an exact rational", value=value
    )


def parse_rational(text: str) -> Fraction:
    """
    Parse the ``p/q`` grammar (``/q`` optional, q > 0)

    Raises:
        PolyParseError: text is not an exact rational literal
    """
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise PolyParseError(f"not a rational literal: {text!r}", text=text)
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise PolyParseError(f"zero denominator in {text!r}", text=text)
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    """Format as ``p/q``, omitting ``/q`` when q = 1"""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_height(value: Fraction) -> int:
    """Height h(u/v) = max(|u|, |v|) of a reduced rational"""
    return max(abs(value.numerator), value.denominator)


def denominator_lcm(values: Iterable[Fraction]) -> int:
    """Least common multiple of the denominators"""
    result = 1
    for value in values:
        d = value.denominator
        result = result * d // gcd(result, d)
    return result


def integer_content(values: Iterable[int]) -> int:
    """Nonnegative gcd of a list of integers"""
    result = 0
    for value in values:
        result = gcd(result, value)
        if result == 1:
            break
    return result
