"""
Tests for root-structure analytics and the Bernoulli/Euler lemma sweeps
"""

from fractions import Fraction

import pytest

from powersum_cert.analytics.root_structure import (
    GOLDEN_QUADRATIC,
    analyze_roots,
    check_lemma3,
    check_lemma4,
    check_lemma5_rational,
    check_lemma6,
    default_shifts,
    is_product_of_odd_beta_quadratics,
)
from powersum_cert.core.classical_polys import bernoulli_number, bernoulli_poly
from powersum_cert.core.data_structures import Verdict
from powersum_cert.core.exceptions import DomainError, HypothesisError, ParameterError
from powersum_cert.core.polynomial import Poly, squarefree_decompose


def test_analyze_double_roots(x):
    report = analyze_roots(x ** 2 * (x - 1) ** 2)
    assert report.distinct_roots == 2
    assert report.odd_multiplicity_roots == 0
    assert report.simple_roots == 0
    assert report.multiple_factor == x ** 2 - x
    assert report.max_multiplicity == 2


def test_analyze_shifted_bernoulli_six(x):
    report = analyze_roots(bernoulli_poly(6) - bernoulli_number(6))
    assert report.counts() == {
        "distinct_roots": 4,
        "odd_multiplicity_roots": 2,
        "simple_roots": 2,
    }
    assert report.multiple_factor == x ** 2 - x


def test_multiple_factor_is_gcd_with_derivative(x):
    p = (x - 2) ** 3 * (x + 1) ** 2 * (x ** 2 + 5)
    report = analyze_roots(p)
    assert report.multiple_factor == (x - 2) ** 2 * (x + 1)
    assert report.multiplicity_profile == ((1, 2), (2, 1), (3, 1))


def test_squarefree_polynomial_counts(x):
    p = x ** 5 - x + 1
    report = analyze_roots(p)
    assert report.distinct_roots == report.odd_multiplicity_roots == report.simple_roots == 5
    assert report.multiple_factor is None


def test_coprime_counts(x):
    p = (x - 1) ** 3 * (x - 2) ** 2 * (x - 3) * (x ** 2 + 1) ** 6
    report = analyze_roots(p, primes=[2, 3, 5])
    assert report.coprime_counts[2] == report.odd_multiplicity_roots == 2
    assert report.coprime_counts[3] == 2
    assert report.coprime_counts[5] == 5 == report.distinct_roots
    assert all(count <= report.distinct_roots for count in report.coprime_counts.values())


def test_constant_polynomial_rejected():
    with pytest.raises(DomainError):
        analyze_roots(Poly.constant(7))


def test_odd_beta_shape(x):
    y = x ** 2 - x
    assert is_product_of_odd_beta_quadratics((y - 1) * (y - 3))
    assert is_product_of_odd_beta_quadratics((y - 1) ** 2)
    assert is_product_of_odd_beta_quadratics(Poly.constant(1))
    assert not is_product_of_odd_beta_quadratics(y - 2)
    assert not is_product_of_odd_beta_quadratics(y + 1)
    assert not is_product_of_odd_beta_quadratics(x ** 2 - 2)
    assert not is_product_of_odd_beta_quadratics(x ** 3 - x)


def test_bernoulli_multiple_factor_sweep():
    records = check_lemma3(40)
    assert [record.k for record in records] == list(range(1, 41))
    assert all(record.verdict is Verdict.PASS for record in records)


def test_euler_multiple_factor_sweep():
    records = check_lemma6(40)
    assert all(record.passed for record in records)
    by_k = {record.k: record for record in records}
    assert by_k[5].multiple_factor == GOLDEN_QUADRATIC
    assert by_k[5].counts["max_multiplicity"] == 2
    assert by_k[4].multiple_factor is None


def test_sweep_rejects_nonpositive_kmax():
    with pytest.raises(ParameterError):
        check_lemma3(0)
    with pytest.raises(ParameterError):
        check_lemma6(-2)


def test_default_shifts_include_critical_values():
    shifts = default_shifts("bernoulli", 4)
    assert Fraction(1, 30) in shifts
    assert Fraction(-7, 240) in shifts
    assert len(shifts) == len(set(shifts))
    with pytest.raises(ParameterError):
        default_shifts("legendre", 4)


@pytest.mark.parametrize("k", [3, 5, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20])
def test_odd_multiplicity_roots_of_shifted_bernoulli(k):
    records = check_lemma4(k)
    assert records
    assert all(record.passed for record in records)
    assert all(record.counts["odd_multiplicity_roots"] >= 3 for record in records)


def test_odd_multiplicity_explicit_shifts():
    records = check_lemma4(5, shifts=[0])
    assert records[0].counts["odd_multiplicity_roots"] == 5
    records = check_lemma4(3, shifts=["0"])
    assert records[0].counts["odd_multiplicity_roots"] == 3
    assert records[0].shift == 0


@pytest.mark.parametrize("k", [2, 4, 6])
def test_odd_multiplicity_check_outside_hypotheses(k):
    with pytest.raises(HypothesisError):
        check_lemma4(k)


@pytest.mark.parametrize("k", range(7, 17))
def test_simple_roots_of_shifted_euler(k):
    records = check_lemma5_rational(k)
    assert all(record.passed for record in records)
    assert all(record.counts["simple_roots"] >= 3 for record in records)


def test_simple_root_check_outside_hypotheses():
    with pytest.raises(HypothesisError):
        check_lemma5_rational(6)


def test_parallel_sweep_matches_inline():
    assert check_lemma6(12, workers=2) == check_lemma6(12, workers=1)


def test_excluded_index_witnesses(x):
    quartic = squarefree_decompose(bernoulli_poly(4) + Fraction(1, 30))
    assert quartic.reconstruct() == x ** 2 * (x - 1) ** 2
    assert analyze_roots(quartic.reconstruct()).odd_multiplicity_roots == 0

    sextic = squarefree_decompose(bernoulli_poly(6) - bernoulli_number(6))
    assert sextic.reconstruct() == x ** 2 * (x - 1) ** 2 * (x ** 2 - x - Fraction(1, 2))
    assert analyze_roots(sextic.reconstruct()).odd_multiplicity_roots == 2
