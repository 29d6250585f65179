#!/usr/bin/env python3
"""
Polynomial Module

Dense univariate polynomials over the rationals: ring arithmetic, Horner
evaluation, differentiation, linear substitution, GCD, Yun squarefree
decomposition, exact rational roots and the canonical text grammar.

All values are immutable; every operation returns a new polynomial.

Author: powersum-cert Development Team
License: Apache License 2.0
"""

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .constants import ROOT_FINDER_PRIME_LIMIT
from .exceptions import DomainError, PolyParseError
from .rational import (
    RationalLike,
    denominator_lcm,
    format_rational,
    integer_content,
    parse_rational,
    to_rational,
)

# Degree of the zero polynomial; -inf keeps deg(p*q) = deg p + deg q honest
DEGREE_OF_ZERO = -math.inf



def _strip(coeffs: List[Any]) -> List[Any]:
    """Drop trailing (highest-degree) zeros in place"""
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True)
class Poly:
    """
    Dense polynomial over Q

    Attributes:
        coeffs: coefficient of x^i at index i, no trailing zeros
    """

    coeffs: Tuple[Fraction, ...] = field(default_factory=tuple)

    def __post_init__(self):
        normalized = _strip([to_rational(c) for c in self.coeffs])
        object.__setattr__(self, "coeffs", tuple(normalized))

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def constant(cls, value: RationalLike) -> "Poly":
        return cls((to_rational(value),))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def from_integers(cls, coeffs: Sequence[int]) -> "Poly":
        return cls(tuple(Fraction(c) for c in coeffs))

    # -- basic properties -------------------------------------------------

    @property
    def degree(self) -> Union[int, float]:
        """Degree, or DEGREE_OF_ZERO for the zero polynomial"""
        if not self.coeffs:
            return DEGREE_OF_ZERO
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    # -- ring operations --------------------------------------------------

    @staticmethod
    def _coerce(other: Any) -> Optional["Poly"]:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.constant(other)
        return None

    def __add__(self, other: Any) -> "Poly":
        other_poly = self._coerce(other)
        if other_poly is None:
            return NotImplemented
        longer, shorter = self.coeffs, other_poly.coeffs
        if len(longer) < len(shorter):
            longer, shorter = shorter, longer
        result = list(longer)
        for i, c in enumerate(shorter):
            result[i] += c
        return Poly(tuple(result))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Any) -> "Poly":
        other_poly = self._coerce(other)
        if other_poly is None:
            return NotImplemented
        return self + (-other_poly)

    def __rsub__(self, other: Any) -> "Poly":
        other_poly = self._coerce(other)
        if other_poly is None:
            return NotImplemented
        return other_poly + (-self)

    def scale(self, factor: RationalLike) -> "Poly":
        """Scalar multiple"""
        factor = to_rational(factor)
        if factor == 0:
            return Poly.zero()
        return Poly(tuple(c * factor for c in self.coeffs))

    def __mul__(self, other: Any) -> "Poly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly.zero()
        result = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                result[i + j] += a * b
        return Poly(tuple(result))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise DomainError("negative polynomial power", operation="pow")
        result = Poly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return poly_divmod(self, other)[1]

    # -- calculus and substitution ----------------------------------------

    def eval(self, t: RationalLike) -> Fraction:
        """Exact value by Horner's scheme"""
        t = to_rational(t)
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * t + c
        return result

    __call__ = eval

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def compose_linear(self, u: RationalLike, v: RationalLike) -> "Poly":
        """p(u*x + v), Horner in (u*x + v)"""
        linear = Poly((to_rational(v), to_rational(u)))
        result = Poly.zero()
        for c in reversed(self.coeffs):
            result = result * linear + c
        return result

    # -- normal forms -----------------------------------------------------

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(1 / self.leading_coefficient)

    def primitive(self) -> Tuple[Fraction, List[int]]:
        """
        Split into content and primitive integer part

        Returns:
            (content, ints) with self = content * sum(ints[i] x^i), gcd(ints) = 1
            and a positive leading integer coefficient
        """
        if self.is_zero:
            return Fraction(0), []
        scale = denominator_lcm(self.coeffs)
        ints = [int(c * scale) for c in self.coeffs]
        g = integer_content(ints)
        if ints[-1] < 0:
            g = -g
        ints = [c // g for c in ints]
        return Fraction(g, scale), ints

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly('{format_poly(self)}')"


# ---------------------------------------------------------------------------
# Module-level operations
# ---------------------------------------------------------------------------

def poly_eval(p: Poly, t: RationalLike) -> Fraction:
    """Exact value p(t)"""
    return p.eval(t)


def poly_derivative(p: Poly) -> Poly:
    """Formal derivative"""
    return p.derivative()


def poly_compose_linear(p: Poly, u: RationalLike, v: RationalLike) -> Poly:
    """p(u*x + v)"""
    return p.compose_linear(u, v)


def poly_divmod(p: Poly, q: Poly) -> Tuple[Poly, Poly]:
    """Exact division with remainder over Q"""
    if q.is_zero:
        raise DomainError("division by the zero polynomial", operation="divmod")
    remainder = list(p.coeffs)
    dq = len(q.coeffs) - 1
    if len(remainder) - 1 < dq:
        return Poly.zero(), p
    inverse_lead = 1 / q.leading_coefficient
    quotient = [Fraction(0)] * (len(remainder) - dq)
    for shift in range(len(remainder) - 1 - dq, -1, -1):
        factor = remainder[shift + dq] * inverse_lead
        quotient[shift] = factor
        if factor == 0:
            continue
        for i, c in enumerate(q.coeffs):
            remainder[shift + i] -= factor * c
    return Poly(tuple(quotient)), Poly(tuple(remainder[:dq]))


def exact_quotient(p: Poly, q: Poly) -> Poly:
    """p / q when q divides p"""
    quotient, remainder = poly_divmod(p, q)
    if not remainder.is_zero:
        raise DomainError(f"{q} does not divide {p}", operation="exact_quotient")
    return quotient


# -- integer polynomial kernels (coefficient lists, index = degree) ---------

def _int_primitive(coeffs: List[int]) -> List[int]:
    if not coeffs:
        return coeffs
    g = integer_content(coeffs)
    if coeffs[-1] < 0:
        g = -g
    return [c // g for c in coeffs]


def _int_pseudo_remainder(a: List[int], b: List[int]) -> List[int]:
    """Remainder of lc(b)^e * a by b, content removed after every step"""
    remainder = list(a)
    db = len(b) - 1
    lead_b = b[-1]
    while remainder and len(remainder) - 1 >= db:
        lead_r = remainder[-1]
        shift = len(remainder) - 1 - db
        remainder = [lead_b * c for c in remainder]
        for i, c in enumerate(b):
            remainder[shift + i] -= lead_r * c
        _strip(remainder)
        g = integer_content(remainder)
        if g > 1:
            remainder = [c // g for c in remainder]
    return remainder


def _int_gcd(a: List[int], b: List[int]) -> List[int]:
    """Primitive polynomial remainder sequence"""
    a, b = _int_primitive(a), _int_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _int_primitive(_int_pseudo_remainder(a, b))
    return a


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """
    Monic greatest common divisor over Q

    Runs a primitive pseudo-remainder sequence on the integer parts so that
    coefficient growth stays bounded.

    Raises:
        DomainError: both inputs are zero
    """
    if p.is_zero and q.is_zero:
        raise DomainError("gcd of two zero polynomials", operation="poly_gcd")
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    _, a = p.primitive()
    _, b = q.primitive()
    return Poly.from_integers(_int_gcd(a, b)).monic()


# ---------------------------------------------------------------------------
# Squarefree decomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SquarefreeDecomposition:
    """
    content * prod(factor_i ** multiplicity_i)

    Attributes:
        content: leading coefficient of the decomposed polynomial
        parts: (monic squarefree factor, multiplicity) pairs, pairwise coprime,
            multiplicities strictly increasing
    """

    content: Fraction
    parts: Tuple[Tuple[Poly, int], ...]

    def reconstruct(self) -> Poly:
        result = Poly.constant(self.content)
        for factor, multiplicity in self.parts:
            result = result * factor ** multiplicity
        return result

    def multiplicities(self) -> List[int]:
        """Multiplicity of every root over C, with repetition by factor degree"""
        out: List[int] = []
        for factor, multiplicity in self.parts:
            out.extend([multiplicity] * int(factor.degree))
        return out

    def factor_with_multiplicity(self, multiplicity: int) -> Poly:
        for factor, m in self.parts:
            if m == multiplicity:
                return factor
        return Poly.constant(1)

    @property
    def max_multiplicity(self) -> int:
        return self.parts[-1][1] if self.parts else 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "content": format_rational(self.content),
            "parts": [
                {"factor": format_poly(factor), "multiplicity": multiplicity}
                for factor, multiplicity in self.parts
            ],
        }


def squarefree_decompose(p: Poly) -> SquarefreeDecomposition:
    """
    Yun's squarefree decomposition over Q

    Raises:
        DomainError: p is the zero polynomial
    """
    if p.is_zero:
        raise DomainError("squarefree decomposition of zero", operation="squarefree_decompose")
    content = p.leading_coefficient
    f = p.monic()
    if f.is_constant:
        return SquarefreeDecomposition(content, ())

    f_prime = f.derivative()
    a0 = poly_gcd(f, f_prime)
    b = exact_quotient(f, a0)
    c = exact_quotient(f_prime, a0)
    d = c - b.derivative()

    parts: List[Tuple[Poly, int]] = []
    multiplicity = 1
    while not b.is_constant:
        a = poly_gcd(b, d)
        if not a.is_constant:
            parts.append((a, multiplicity))
        b = exact_quotient(b, a)
        c = exact_quotient(d, a)
        d = c - b.derivative()
        multiplicity += 1
    return SquarefreeDecomposition(content, tuple(parts))


# ---------------------------------------------------------------------------
# Rational roots
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1)
def _small_primes() -> Tuple[int, ...]:
    limit = ROOT_FINDER_PRIME_LIMIT
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(limit ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(sieve[i * i::i]))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _eval_mod(coeffs: List[int], t: int, modulus: int) -> int:
    result = 0
    for c in reversed(coeffs):
        result = (result * t + c) % modulus
    return result


def _rational_reconstruct(residue: int, modulus: int,
                          numerator_bound: int, denominator_bound: int) -> Optional[Fraction]:
    """u/v with u = v*residue (mod modulus), |u| <= N, 0 < |v| <= D"""
    r0, r1 = modulus, residue % modulus
    s0, s1 = 0, 1
    while r1 > numerator_bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > denominator_bound:
        return None
    return Fraction(r1, s1)


def _squarefree_rational_roots(f: Poly) -> List[Fraction]:
    """
    Rational roots of a squarefree polynomial

    Any root u/v in lowest terms has u | c0 and v | cn, so it reduces to a
    simple root modulo a prime p not dividing cn. Such roots are lifted by
    Newton iteration until p^e > 2*|c0|*|cn| and then recovered uniquely by
    rational reconstruction; every candidate is confirmed by exact evaluation.
    """
    _, ints = f.primitive()
    roots: List[Fraction] = []
    if ints and ints[0] == 0:
        roots.append(Fraction(0))
        while ints and ints[0] == 0:
            ints = ints[1:]
    if len(ints) <= 1:
        return roots
    if len(ints) == 2:
        roots.append(Fraction(-ints[0], ints[1]))
        return sorted(roots)

    c0, cn = abs(ints[0]), abs(ints[-1])
    target = 2 * c0 * cn
    derivative = [i * c for i, c in enumerate(ints) if i > 0]

    for prime in _small_primes():
        if cn % prime == 0:
            continue
        residues = [t for t in range(prime) if _eval_mod(ints, t, prime) == 0]
        if any(_eval_mod(derivative, t, prime) == 0 for t in residues):
            continue
        break
    else:
        raise DomainError("no prime of good reduction below the search limit",
                          operation="rational_roots")

    for residue in residues:
        modulus = prime
        while modulus <= target:
            modulus = modulus * modulus
            value = _eval_mod(ints, residue, modulus)
            slope = _eval_mod(derivative, residue, modulus)
            residue = (residue - value * pow(slope, -1, modulus)) % modulus
        candidate = _rational_reconstruct(residue, modulus, c0, cn)
        if candidate is not None and f.eval(candidate) == 0:
            roots.append(candidate)
    return sorted(roots)


def rational_roots(p: Poly, min_multiplicity: int = 1) -> List[Tuple[Fraction, int]]:
    """
    All rational roots with exact multiplicities

    Args:
        p: nonzero polynomial
        min_multiplicity: skip squarefree parts of lower multiplicity

    Raises:
        DomainError: p is the zero polynomial
    """
    if p.is_zero:
        raise DomainError("rational roots of zero", operation="rational_roots")
    found: List[Tuple[Fraction, int]] = []
    for factor, multiplicity in squarefree_decompose(p).parts:
        if multiplicity < min_multiplicity:
            continue
        found.extend((root, multiplicity) for root in _squarefree_rational_roots(factor))
    return sorted(found)


def poly_height(p: Poly) -> int:
    """Naive height of the primitive integer form (0 for the zero polynomial)"""
    if p.is_zero:
        return 0
    _, ints = p.primitive()
    return max(abs(c) for c in ints)


def product(polys: Iterable[Poly]) -> Poly:
    result = Poly.constant(1)
    for poly in polys:
        result = result * poly
    return result


# ---------------------------------------------------------------------------
# Canonical text form
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(r"([+-]?)([^+-]+)")
_MONOMIAL_RE = re.compile(r"^(?:(\d+(?:/\d+)?)\*)?x(?:\^(\d+))?$")
_CONSTANT_RE = re.compile(r"^\d+(?:/\d+)?$")


def format_poly(p: Poly) -> str:
    """Terms in descending degree, coefficients as p/q, e.g. ``x^3 - 3/2*x^2 + 1/2*x``"""
    if p.is_zero:
        return "0"
    pieces: List[str] = []
    for degree in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[degree]
        if c == 0:
            continue
        magnitude = abs(c)
        if degree == 0:
            body = format_rational(magnitude)
        else:
            monomial = "x" if degree == 1 else f"x^{degree}"
            body = monomial if magnitude == 1 else f"{format_rational(magnitude)}*{monomial}"
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(pieces)


def parse_poly(text: str) -> Poly:
    """
    Parse the canonical grammar produced by format_poly

    Raises:
        PolyParseError: text is not a polynomial in x with p/q coefficients
    """
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise PolyParseError("empty polynomial text", text=text)

    coeffs: Dict[int, Fraction] = {}
    position = 0
    for match in _TERM_RE.finditer(compact):
        if match.start() != position:
            raise PolyParseError(f"unexpected character in {text!r}", text=text, position=position)
        position = match.end()
        sign = -1 if match.group(1) == "-" else 1
        body = match.group(2)

        monomial = _MONOMIAL_RE.match(body)
        if monomial:
            coefficient = parse_rational(monomial.group(1)) if monomial.group(1) else Fraction(1)
            degree = int(monomial.group(2)) if monomial.group(2) else 1
        elif _CONSTANT_RE.match(body):
            coefficient = parse_rational(body)
            degree = 0
        else:
            raise PolyParseError(f"malformed term {body!r}", text=text, position=match.start())
        coeffs[degree] = coeffs.get(degree, Fraction(0)) + sign * coefficient

    if position != len(compact):
        raise PolyParseError(f"trailing input in {text!r}", text=text, position=position)

    dense = [Fraction(0)] * (max(coeffs) + 1)
    for degree, c in coeffs.items():
        dense[degree] = c
    return Poly(tuple(dense))
