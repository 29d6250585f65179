#!/usr/bin/env python3
"""
Data Structures Module

Core data structures for powersum-cert. Every record exposes ``to_dict`` with
rationals serialized as ``p/q`` strings and polynomials in canonical text.

Author: powersum-cert Development Team
License: Apache License 2.0
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Any, Dict, Optional, Tuple, Union

from .constants import DEFAULT_ELL_MAX
from .exceptions import ParameterError
from .polynomial import Poly, format_poly
from .rational import RationalLike, format_rational, to_rational


class PowerSumFamily(Enum):
    """Power-sum polynomial family"""
    S = "S"
    T_PLUS = "T+"
    T_MINUS = "T-"

    @classmethod
    def from_label(cls, label: Union[str, "PowerSumFamily"]) -> "PowerSumFamily":
        """Accept ``S``, ``T+``, ``T-`` or the member names"""
        if isinstance(label, cls):
            return label
        text = str(label).strip().upper()
        for member in cls:
            if text in (member.value, member.name):
                return member
        raise ParameterError(f"unknown family {label!r} (use S, T+ or T-)",
                             parameter="family", value=label)

    @property
    def is_alternating(self) -> bool:
        return self is not PowerSumFamily.S

    @property
    def sign(self) -> int:
        """+1 for T+, -1 for T-, +1 for S"""
        return -1 if self is PowerSumFamily.T_MINUS else 1


class Verdict(Enum):
    """Outcome of a single lemma or hypothesis check"""
    PASS = "PASS"
    FAIL = "FAIL"

    @classmethod
    def of(cls, condition: bool) -> "Verdict":
        return cls.PASS if condition else cls.FAIL


class CertificateVerdict(Enum):
    """Outcome of a finiteness certificate"""
    CERTIFIED = "CERTIFIED"
    HYPOTHESIS_VIOLATED = "HYPOTHESIS_VIOLATED"
    OUT_OF_THEOREM_RANGE = "OUT_OF_THEOREM_RANGE"


def _require_int(name: str, value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParameterError(f"{name} must be an integer", parameter=name, value=value)
    return value


@dataclass(frozen=True)
class ProgressionParams:
    """
    Arithmetic progression a*i + b raised to the power k

    Attributes:
        a: nonzero step
        b: offset, coprime to a
        k: exponent
    """

    a: int
    b: int
    k: int

    def __post_init__(self):
        _require_int("a", self.a)
        _require_int("b", self.b)
        _require_int("k", self.k)
        if self.a == 0:
            raise ParameterError("a must be nonzero", parameter="a", value=self.a)
        if gcd(self.a, self.b) != 1:
            raise ParameterError(f"gcd(a, b) must be 1, got gcd({self.a}, {self.b})",
                                 parameter="b", value=self.b)
        if self.k < 0:
            raise ParameterError("k must be nonnegative", parameter="k", value=self.k)

    @property
    def ratio(self) -> Fraction:
        """b/a"""
        return Fraction(self.b, self.a)

    @property
    def is_classical(self) -> bool:
        return (self.a, self.b) == (1, 0)

    def to_dict(self) -> Dict[str, Any]:
        return {"a": self.a, "b": self.b, "k": self.k}


@dataclass(frozen=True)
class QuadraticRHS:
    """g(y) = A*y^2 + B*y + C with A != 0"""

    A: Fraction
    B: Fraction = Fraction(0)
    C: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("A", "B", "C"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if self.A == 0:
            raise ParameterError("leading coefficient A must be nonzero", parameter="A", value=0)

    @property
    def mu(self) -> Fraction:
        """B / 2A, so that g(y) = A*(y + mu)^2 - nu"""
        return self.B / (2 * self.A)

    @property
    def nu(self) -> Fraction:
        """(B^2 - 4AC) / 4A"""
        return (self.B * self.B - 4 * self.A * self.C) / (4 * self.A)

    def eval(self, y: RationalLike) -> Fraction:
        y = to_rational(y)
        return (self.A * y + self.B) * y + self.C

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "quadratic",
            "A": format_rational(self.A),
            "B": format_rational(self.B),
            "C": format_rational(self.C),
        }


@dataclass(frozen=True)
class PowerRHS:
    """
    c*y^ell + d with c != 0

    ``ell`` is None when the exponent is unknown.
    """

    c: Fraction
    d: Fraction = Fraction(0)
    ell: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "c", to_rational(self.c))
        object.__setattr__(self, "d", to_rational(self.d))
        if self.c == 0:
            raise ParameterError("coefficient c must be nonzero", parameter="c", value=0)
        if self.ell is not None:
            _require_int("ell", self.ell)
            if self.ell < 2:
                raise ParameterError("exponent ell must be at least 2", parameter="ell",
                                     value=self.ell)

    def eval(self, y: int, ell: Optional[int] = None) -> Fraction:
        exponent = ell if ell is not None else self.ell
        if exponent is None:
            raise ParameterError("exponent required to evaluate", parameter="ell")
        return self.c * Fraction(y) ** exponent + self.d

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "power",
            "c": format_rational(self.c),
            "d": format_rational(self.d),
            "ell": self.ell if self.ell is not None else "unknown",
        }


RHS = Union[QuadraticRHS, PowerRHS]


@dataclass(frozen=True)
class SearchBox:
    """
    Bounded search region

    Attributes:
        x_min: first x scanned
        x_max: last x scanned (inclusive)
        ell_max: largest exponent tried when the exponent is unknown
        require_y_gt_1: keep only |y| > 1; None picks the default for the
            right-hand side kind (on for power, off for quadratic)
    """

    x_min: int
    x_max: int
    ell_max: int = DEFAULT_ELL_MAX
    require_y_gt_1: Optional[bool] = None

    def __post_init__(self):
        _require_int("x_min", self.x_min)
        _require_int("x_max", self.x_max)
        _require_int("ell_max", self.ell_max)
        if self.x_min > self.x_max:
            raise ParameterError(f"empty box: x_min={self.x_min} > x_max={self.x_max}",
                                 parameter="x_min", value=self.x_min)
        if self.ell_max < 2:
            raise ParameterError("ell_max must be at least 2", parameter="ell_max",
                                 value=self.ell_max)

    def filters_small_y(self, power_rhs: bool) -> bool:
        if self.require_y_gt_1 is None:
            return power_rhs
        return self.require_y_gt_1

    @property
    def size(self) -> int:
        return self.x_max - self.x_min + 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "x_min": self.x_min,
            "x_max": self.x_max,
            "ell_max": self.ell_max,
            "require_y_gt_1": self.require_y_gt_1,
        }


@dataclass(frozen=True)
class Solution:
    """
    Integer solution of a power-sum equation

    Attributes:
        x: argument of the power-sum polynomial
        y: integer unknown on the right-hand side
        family: power-sum family
        lhs_value: exact value of the family polynomial at x
        ell: exponent for power right-hand sides, None for quadratic ones
        params: progression the solution belongs to
    """

    x: int
    y: int
    family: PowerSumFamily
    lhs_value: Fraction
    ell: Optional[int] = None
    params: Optional[ProgressionParams] = None

    @property
    def sort_key(self) -> Tuple[int, int, int]:
        return (self.x, self.ell or 0, self.y)

    @property
    def schaffer_n(self) -> Optional[int]:
        """Number of terms 1^k + ... + n^k in the classical indexing"""
        if self.x < 1 or self.family is not PowerSumFamily.S:
            return None
        if self.params is None or not self.params.is_classical:
            return None
        return self.x - 1

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {"x": self.x, "y": self.y}
        if self.ell is not None:
            result["ell"] = self.ell
        result["family"] = self.family.value
        result["lhs_value"] = format_rational(self.lhs_value)
        if self.schaffer_n is not None:
            result["schaffer_n"] = self.schaffer_n
        return result


@dataclass(frozen=True)
class RootStructureReport:
    """
    Root counts over C read off a squarefree decomposition

    Attributes:
        distinct_roots: number of distinct complex roots
        odd_multiplicity_roots: roots of odd multiplicity
        simple_roots: roots of multiplicity one
        coprime_counts: ell -> roots with multiplicity coprime to ell
        multiple_factor: monic gcd(p, p') when nonconstant
        multiplicity_profile: (multiplicity, number of roots) pairs
    """

    distinct_roots: int
    odd_multiplicity_roots: int
    simple_roots: int
    coprime_counts: Dict[int, int] = field(default_factory=dict)
    multiple_factor: Optional[Poly] = None
    multiplicity_profile: Tuple[Tuple[int, int], ...] = ()

    @property
    def max_multiplicity(self) -> int:
        return max((m for m, _ in self.multiplicity_profile), default=0)

    def counts(self) -> Dict[str, int]:
        return {
            "distinct_roots": self.distinct_roots,
            "odd_multiplicity_roots": self.odd_multiplicity_roots,
            "simple_roots": self.simple_roots,
        }

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = self.counts()
        result["coprime_counts"] = {str(ell): n for ell, n in sorted(self.coprime_counts.items())}
        result["multiplicity_profile"] = [list(pair) for pair in self.multiplicity_profile]
        result["multiple_factor"] = (
            format_poly(self.multiple_factor) if self.multiple_factor is not None else None
        )
        return result


@dataclass(frozen=True)
class LemmaRecord:
    """One row of a lemma sweep"""

    lemma: str
    k: int
    verdict: Verdict
    shift: Optional[Fraction] = None
    counts: Dict[str, int] = field(default_factory=dict)
    multiple_factor: Optional[Poly] = None

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {"lemma": self.lemma, "k": self.k}
        if self.shift is not None:
            result["s"] = format_rational(self.shift)
        result["counts"] = dict(self.counts)
        result["verdict"] = self.verdict.value
        result["multiple_factor"] = (
            format_poly(self.multiple_factor) if self.multiple_factor is not None else None
        )
        return result


@dataclass(frozen=True)
class HypothesisCheck:
    """A root-structure hypothesis evaluated on the reduced polynomial"""

    lemma_id: str
    claim: str
    witness: Dict[str, int]
    verdict: Verdict

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lemma_id": self.lemma_id,
            "claim": self.claim,
            "witness": dict(self.witness),
            "verdict": self.verdict.value,
        }


@dataclass(frozen=True)
class ShiftConstants:
    """Proof-time constants mu, nu and the shift s"""

    mu: Optional[Fraction] = None
    nu: Optional[Fraction] = None
    s: Optional[Fraction] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            name: (format_rational(value) if value is not None else None)
            for name, value in (("mu", self.mu), ("nu", self.nu), ("s", self.s))
        }


@dataclass(frozen=True)
class FinitenessCertificate:
    """
    Record that a theorem's root-structure hypotheses hold at one instance

    The certificate attests which hypotheses hold; it never carries a
    numeric bound on the solutions.
    """

    theorem_id: int
    family: PowerSumFamily
    params: ProgressionParams
    rhs: RHS
    reduced_poly: Poly
    shift_constants: ShiftConstants
    hypothesis_checks: Tuple[HypothesisCheck, ...]
    verdict: CertificateVerdict
    degree: int = 0
    naive_height: int = 0
    shift_height: Optional[int] = None
    notes: Tuple[str, ...] = ()

    @property
    def is_certified(self) -> bool:
        return self.verdict is CertificateVerdict.CERTIFIED

    @property
    def sort_key(self) -> Tuple[int, int, int, int]:
        return (self.theorem_id, self.params.k, self.params.a, self.params.b)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "theorem_id": self.theorem_id,
            "family": self.family.value,
            "params": self.params.to_dict(),
            "rhs": self.rhs.to_dict(),
            "reduced_poly": format_poly(self.reduced_poly),
            "degree": self.degree,
            "naive_height": self.naive_height,
            "shift_constants": self.shift_constants.to_dict(),
            "shift_height": self.shift_height,
            "hypothesis_checks": [check.to_dict() for check in self.hypothesis_checks],
            "verdict": self.verdict.value,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class ProbeReport:
    """
    Derivative root report of a contradiction probe

    Attributes:
        family: S, T+ or T-
        params: progression
        d: constant moved to the left-hand side
        derivative: derivative of the family polynomial
        rational_roots: (root, multiplicity) pairs of the derivative
        forbidden_multiplicity: multiplicity whose presence would allow the
            degenerate perfect-power shape
        multiple_factor: monic gcd of the derivative with its own derivative,
            shifted back to the unshifted Bernoulli/Euler variable
        target_distinct_roots: distinct roots of the family polynomial minus d
        verdict: PASS when the degenerate shape is ruled out
    """

    family: PowerSumFamily
    params: ProgressionParams
    d: Fraction
    derivative: Poly
    rational_roots: Tuple[Tuple[Fraction, int], ...]
    forbidden_multiplicity: int
    multiple_factor: Optional[Poly]
    target_distinct_roots: int
    verdict: Verdict
    notes: Tuple[str, ...] = ()

    @property
    def max_rational_multiplicity(self) -> int:
        return max((m for _, m in self.rational_roots), default=0)

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def to_dict(self) -> Dict[str, Any]:
        return {
            "family": self.family.value,
            "params": self.params.to_dict(),
            "d": format_rational(self.d),
            "derivative": format_poly(self.derivative),
            "rational_roots": [
                {"root": format_rational(root), "multiplicity": m}
                for root, m in self.rational_roots
            ],
            "max_rational_multiplicity": self.max_rational_multiplicity,
            "forbidden_multiplicity": self.forbidden_multiplicity,
            "multiple_factor": (
                format_poly(self.multiple_factor) if self.multiple_factor is not None else None
            ),
            "target_distinct_roots": self.target_distinct_roots,
            "verdict": self.verdict.value,
            "notes": list(self.notes),
        }
