"""
Tests for bounded Diophantine search
"""

import random
import threading
from fractions import Fraction
from math import isqrt

import pytest

from powersum_cert.analytics.dioph_search import (
    check_solution,
    integer_nth_root,
    solve,
    solve_power_rhs,
    solve_quadratic_rhs,
)
from powersum_cert.core.data_structures import (
    PowerRHS,
    PowerSumFamily,
    ProgressionParams,
    QuadraticRHS,
    SearchBox,
    Solution,
)
from powersum_cert.core.exceptions import ParameterError, SearchCancelledError
from powersum_cert.core.power_sums import build_family, direct_alt_power_sum, direct_power_sum

S = PowerSumFamily.S
T_PLUS = PowerSumFamily.T_PLUS
T_MINUS = PowerSumFamily.T_MINUS
SQUARES = ProgressionParams(1, 0, 2)


def _pairs(solutions):
    return {(s.x, s.y) for s in solutions}


def test_integer_nth_root():
    assert integer_nth_root(4900, 2) == (70, True)
    assert integer_nth_root(4901, 2) == (70, False)
    assert integer_nth_root(0, 7) == (0, True)
    assert integer_nth_root(1, 3) == (1, True)
    assert integer_nth_root(1024, 5) == (4, True)
    assert integer_nth_root(1025, 5) == (4, False)
    assert integer_nth_root(1023, 5) == (3, False)
    assert integer_nth_root(10 ** 60 + 1, 3) == (10 ** 20, False)
    assert integer_nth_root(3 ** 200, 200) == (3, True)


def test_integer_nth_root_agrees_with_isqrt():
    rng = random.Random(7)
    for _ in range(500):
        v = rng.randrange(0, 10 ** 30)
        root, exact = integer_nth_root(v, 2)
        assert root == isqrt(v)
        assert exact == (root * root == v)


def test_integer_nth_root_is_floor():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randrange(3, 9)
        v = rng.randrange(0, 10 ** 40)
        root, _ = integer_nth_root(v, n)
        assert root ** n <= v < (root + 1) ** n


def test_integer_nth_root_rejects_bad_input():
    with pytest.raises(ParameterError):
        integer_nth_root(-8, 3)
    with pytest.raises(ParameterError):
        integer_nth_root(8, 0)


def test_sum_of_squares_square_solutions():
    solutions = solve_quadratic_rhs(S, SQUARES, QuadraticRHS(1), SearchBox(0, 100))
    assert _pairs(solutions) == {(0, 0), (1, 0), (2, -1), (2, 1), (25, -70), (25, 70)}
    assert [s.x for s in solutions] == sorted(s.x for s in solutions)
    nontrivial = [s for s in solutions if s.x == 25]
    assert all(s.lhs_value == 4900 and s.schaffer_n == 24 for s in nontrivial)
    assert nontrivial[0].to_dict() == {
        "x": 25, "y": -70, "family": "S", "lhs_value": "4900", "schaffer_n": 24,
    }


def test_classical_term_count_needs_positive_x():
    solutions = solve_quadratic_rhs(S, SQUARES, QuadraticRHS(1), SearchBox(0, 2))
    by_x = {s.x: s for s in solutions}
    assert by_x[0].schaffer_n is None
    assert "schaffer_n" not in by_x[0].to_dict()
    assert by_x[1].schaffer_n == 0
    assert by_x[2].schaffer_n == 1

    shifted = solve_quadratic_rhs(S, ProgressionParams(2, 1, 2), QuadraticRHS(1), SearchBox(0, 1))
    assert all(s.schaffer_n is None for s in shifted)


def test_large_y_filter_on_quadratic():
    box = SearchBox(0, 100, require_y_gt_1=True)
    solutions = solve_quadratic_rhs(S, SQUARES, QuadraticRHS(1), box)
    assert _pairs(solutions) == {(25, -70), (25, 70)}
    empty = solve_quadratic_rhs(S, SQUARES, QuadraticRHS(1), SearchBox(2, 23, require_y_gt_1=True))
    assert empty == []


def test_planted_quadratic_solution():
    params = ProgressionParams(2, 1, 3)
    x0 = 5
    value = build_family(T_PLUS, params).eval(x0)
    solutions = solve_quadratic_rhs(T_PLUS, params, QuadraticRHS(1, 0, value), SearchBox(-10, 10))
    assert (x0, 0) in _pairs(solutions)


def test_quadratic_with_linear_term():
    # x(x+1)/2 = y^2 + y has y = (-1 + sqrt(1 + 2x(x+1)))/2
    rhs = QuadraticRHS(1, 1, 0)
    solutions = solve_quadratic_rhs(T_PLUS, ProgressionParams(1, 1, 2), rhs, SearchBox(0, 30))
    for solution in solutions:
        assert check_solution(solution, rhs)
    assert (0, 0) in _pairs(solutions) and (0, -1) in _pairs(solutions)


def test_power_search_default_filter():
    solutions = solve_power_rhs(S, SQUARES, PowerRHS(1, 0, 2), SearchBox(0, 50))
    assert [(s.x, s.y, s.ell) for s in solutions] == [(25, -70, 2), (25, 70, 2)]

    unfiltered = solve_power_rhs(S, SQUARES, PowerRHS(1, 0, 2),
                                 SearchBox(0, 50, require_y_gt_1=False))
    assert _pairs(unfiltered) == {(0, 0), (1, 0), (2, -1), (2, 1), (25, -70), (25, 70)}


def test_unknown_exponent_search():
    params = ProgressionParams(1, 0, 5)
    solutions = solve_power_rhs(S, params, PowerRHS(1), SearchBox(0, 30, ell_max=6))
    assert solutions
    assert any(s.x == 14 and abs(s.y) == 1001 and s.ell == 2 for s in solutions)
    assert all(abs(s.y) > 1 for s in solutions)
    for solution in solutions:
        assert solution.lhs_value == solution.y ** solution.ell


def test_triangular_squares():
    params = ProgressionParams(1, 1, 2)
    solutions = solve_power_rhs(T_PLUS, params, PowerRHS(1, 0, 2), SearchBox(1, 50))
    assert _pairs(solutions) == {(8, -6), (8, 6), (49, -35), (49, 35)}

    small = solve_power_rhs(T_PLUS, params, PowerRHS(1, 0, 2), SearchBox(1, 50, require_y_gt_1=False))
    assert {(1, -1), (1, 1)} <= _pairs(small)


def test_negative_values_need_odd_exponent():
    params = ProgressionParams(1, 0, 1)
    cubes = solve_power_rhs(S, params, PowerRHS(1, 9, 3), SearchBox(0, 3))
    assert [(s.x, s.y, s.ell) for s in cubes] == [(2, -2, 3)]
    squares = solve_power_rhs(S, params, PowerRHS(1, 9, 2), SearchBox(0, 3, require_y_gt_1=False))
    assert squares == []


def test_chunked_search_matches_single_chunk():
    box = SearchBox(-60, 200)
    rhs = PowerRHS(1, 0, 2)
    single = solve_power_rhs(S, SQUARES, rhs, box, chunk_size=10_000)
    chunked = solve_power_rhs(S, SQUARES, rhs, box, chunk_size=7)
    parallel = solve_power_rhs(S, SQUARES, rhs, box, workers=2, chunk_size=25)
    assert single == chunked == parallel


def test_cancelled_search():
    cancel = threading.Event()
    cancel.set()
    with pytest.raises(SearchCancelledError) as excinfo:
        solve_power_rhs(S, SQUARES, PowerRHS(1, 0, 2), SearchBox(0, 100), chunk_size=10, cancel=cancel)
    assert excinfo.value.completed_chunks == 0
    assert excinfo.value.total_chunks == 11


def test_solutions_satisfy_closed_form_and_summation():
    cases = [
        (S, SQUARES, PowerRHS(1, 0, 2)),
        (T_PLUS, ProgressionParams(1, 1, 2), PowerRHS(1, 0, 2)),
        (S, ProgressionParams(1, 0, 3), PowerRHS(1)),
    ]
    for family, params, rhs in cases:
        for solution in solve(family, params, rhs, SearchBox(1, 60, require_y_gt_1=False)):
            assert check_solution(solution, rhs)
            n = solution.x
            if family is S:
                assert direct_power_sum(params, n) == solution.lhs_value
            elif (n % 2 == 1) == (family is T_PLUS):
                assert direct_alt_power_sum(params, n) == solution.lhs_value


def test_check_solution_rejects_wrong_values():
    rhs = QuadraticRHS(1)
    assert not check_solution(Solution(25, 71, S, Fraction(4900), None, SQUARES), rhs)
    with pytest.raises(ParameterError):
        check_solution(Solution(25, 70, S, Fraction(4900)), rhs)


def test_rhs_kind_is_checked():
    with pytest.raises(ParameterError):
        solve_quadratic_rhs(S, SQUARES, PowerRHS(1, 0, 2), SearchBox(0, 5))
    with pytest.raises(ParameterError):
        solve_power_rhs(S, SQUARES, QuadraticRHS(1), SearchBox(0, 5))


def test_search_box_validation():
    with pytest.raises(ParameterError):
        SearchBox(5, 4)
    with pytest.raises(ParameterError):
        SearchBox(0, 4, ell_max=1)
    assert SearchBox(-3, 3).size == 7


def _oracle_quadratic(lhs_values, rhs, y_bound):
    by_value = {}
    for y in range(-y_bound, y_bound + 1):
        by_value.setdefault(rhs.eval(y), []).append(y)
    return {(x, y) for x, v in lhs_values.items() for y in by_value.get(v, [])}


def _oracle_power(lhs_values, rhs, ells, y_bound):
    by_value = {}
    for ell in ells:
        for y in range(-y_bound, y_bound + 1):
            by_value.setdefault(rhs.eval(y, ell), []).append((y, ell))
    return {(x, y, ell) for x, v in lhs_values.items() for y, ell in by_value.get(v, [])}


def _random_instance(rng):
    family = rng.choice([S, T_PLUS, T_MINUS])
    while True:
        a, b = rng.choice([1, 2, 3, -1, -2]), rng.randrange(-3, 4)
        try:
            params = ProgressionParams(a, b, rng.randrange(1, 5))
            return family, params
        except ParameterError:
            continue


@pytest.mark.parametrize("seed", range(10))
def test_quadratic_search_matches_brute_force(seed):
    rng = random.Random(1000 + seed)
    family, params = _random_instance(rng)
    rhs = QuadraticRHS(rng.choice([1, 2, -1, Fraction(1, 2)]), rng.choice([0, 1, -3]),
                       rng.choice([0, 5, -2, Fraction(1, 2)]))
    box = SearchBox(-40, 40, require_y_gt_1=False)
    f = build_family(family, params)
    lhs_values = {x: f.eval(x) for x in range(-40, 41)}

    found = {(s.x, s.y) for s in solve_quadratic_rhs(family, params, rhs, box) if abs(s.y) <= 2000}
    assert found == _oracle_quadratic(lhs_values, rhs, 2000)


@pytest.mark.parametrize("seed", range(10))
def test_power_search_matches_brute_force(seed):
    rng = random.Random(2000 + seed)
    family, params = _random_instance(rng)
    ell = rng.choice([2, 3, 4, 5, None])
    rhs = PowerRHS(rng.choice([1, 2, -1]), rng.choice([0, 1, -4, 9]), ell)
    box = SearchBox(-40, 40, ell_max=5, require_y_gt_1=False)
    f = build_family(family, params)
    lhs_values = {x: f.eval(x) for x in range(-40, 41)}
    ells = [ell] if ell is not None else [2, 3, 4, 5]

    found = {(s.x, s.y, s.ell) for s in solve_power_rhs(family, params, rhs, box) if abs(s.y) <= 2000}
    assert found == _oracle_power(lhs_values, rhs, ells, 2000)
