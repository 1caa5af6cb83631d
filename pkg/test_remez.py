"""Тесты оценок константы Ремеза: ЛП-оценка, вырожденный случай, замкнутые формулы"""
import math
import time

import numpy as np
import pytest

from smoothrig.errors import ValidationError
from smoothrig.geometry import (
    ball_grid, boundary_samples, build_domains, build_nesting_forest, mu,
    random_circle_configuration, validate_configuration,
)
from smoothrig.poly import MultiPoly, graded_exponents
from smoothrig.remez import (
    brudnyi_ganzburg_bound, empirical_remez_ratio, harnack_max_ovals, inverse_remez,
    remez_bound_topological, remez_estimate_lp, required_ovals,
)

HALF_LINE = np.linspace(-1.0, 0.0, 512)
SEGMENT = np.linspace(-1.0, 1.0, 1024)


@pytest.mark.parametrize('d, expected', [(1, 3.0), (2, 17.0), (3, 99.0), (4, 577.0), (5, 3363.0)])
def test_chebyshev_oracle(d, expected):
    """Z = [-1, 0]: константа Ремеза равна T_d(3)"""
    estimate = remez_estimate_lp(HALF_LINE, d, SEGMENT)
    assert not estimate.infinite
    assert estimate.value == pytest.approx(expected, rel=0.05)
    assert estimate.witness_point is not None
    assert estimate.witness_point[0] == pytest.approx(1.0)


def test_degree_zero_is_one():
    estimate = remez_estimate_lp(HALF_LINE, 0, SEGMENT)
    assert estimate.value == pytest.approx(1.0)
    assert inverse_remez(estimate) == pytest.approx(1.0)


def test_points_on_a_line_are_degenerate():
    """Точки на прямой y = 0 лежат в нулевом множестве многочлена степени 1"""
    zs = np.column_stack([np.linspace(-0.9, 0.9, 20), np.zeros(20)])
    estimate = remez_estimate_lp(zs, 1, ball_grid(2, 8))
    assert estimate.infinite
    assert inverse_remez(estimate) == 0.0
    witness = estimate.witness_poly
    assert witness is not None and not witness.is_zero
    assert np.max(np.abs(witness.values(zs))) < 1e-8
    assert estimate.to_dict()['value'] is None


def test_too_few_points_are_degenerate():
    estimate = remez_estimate_lp(np.array([-0.5, 0.5]), 2, SEGMENT[::64])
    assert estimate.infinite


def test_monotone_in_candidates():
    coarse = remez_estimate_lp(HALF_LINE[::8], 2, SEGMENT[:-1:64])
    fine = remez_estimate_lp(HALF_LINE[::8], 2, SEGMENT[::16])
    assert fine.value >= coarse.value - 1e-9


def test_dimension_mismatch():
    with pytest.raises(ValidationError) as e:
        remez_estimate_lp(HALF_LINE, 1, ball_grid(2, 4))
    assert e.value.kind == 'DimensionMismatch'


def test_topological_bound():
    assert remez_bound_topological(1.0, 2, 2, 2) == pytest.approx(64.0)
    assert required_ovals(3, 2) == 5
    with pytest.raises(ValidationError) as e:
        remez_bound_topological(1.0, 3, 2, 4)
    assert e.value.kind == 'TooFewOvals'
    with pytest.raises(ValidationError) as e:
        remez_bound_topological(0.0, 2, 2, 2)
    assert e.value.kind == 'MuNonPositive'


def test_brudnyi_ganzburg():
    assert brudnyi_ganzburg_bound(1.0, 3, 2) == pytest.approx(1.0)
    values = [brudnyi_ganzburg_bound(lam, 3, 2) for lam in (0.1, 0.3, 0.6, 0.9)]
    assert values == sorted(values, reverse=True)
    # n = 1, lambda = 1/2: T_d(3)
    assert brudnyi_ganzburg_bound(0.5, 2, 1) == pytest.approx(17.0)
    for lam in (0.0, 1.5):
        with pytest.raises(ValidationError) as e:
            brudnyi_ganzburg_bound(lam, 2, 2)
        assert e.value.kind == 'LambdaOutOfRange'


def test_harnack():
    assert harnack_max_ovals(6) == 11
    assert harnack_max_ovals(2) == 1
    assert harnack_max_ovals(4) == 4


def test_empirical_ratio():
    p = MultiPoly.variable(1, 0)
    assert empirical_remez_ratio(p, HALF_LINE, SEGMENT) == pytest.approx(1.0)
    zero_on_boundary = MultiPoly(1, {(1,): 1.0})
    assert empirical_remez_ratio(zero_on_boundary, np.array([0.0]), SEGMENT) == float('inf')


@pytest.mark.parametrize('d', [2, 3])
def test_topological_inequality_never_falsified(d):
    """Отношение max |P| по шару к max |P| по овалам не превосходит (8/mu)^d"""
    rng = np.random.default_rng(100 + d)
    count = (d - 1) ** 2 + 1
    candidates = ball_grid(2, 64)
    exponents = graded_exponents(2, d)
    trials = 0
    while trials < 100:
        ovals = random_circle_configuration(rng, count, max_depth=4, vertices=32)
        if len(ovals) != count:
            continue
        config = validate_configuration(ovals)
        domains = build_domains(build_nesting_forest(config))
        bound = remez_bound_topological(mu(domains), d, 2, config.N)
        boundary = boundary_samples(config, 256)
        p = MultiPoly.from_coefficients(2, exponents, rng.normal(size=len(exponents)))
        assert empirical_remez_ratio(p, boundary, candidates) <= bound + 1e-6
        trials += 1


def test_chebyshev_oracle_runtime():
    """Пять степеней на 1024 кандидатах укладываются в 30 секунд"""
    started = time.perf_counter()
    values = [remez_estimate_lp(HALF_LINE, d, SEGMENT).value for d in range(1, 6)]
    assert time.perf_counter() - started < 30.0
    assert values == pytest.approx([3.0, 17.0, 99.0, 577.0, 3363.0], rel=0.05)


def test_pruned_sweep_matches_candidate_by_candidate():
    zs = HALF_LINE[::8]
    candidates = SEGMENT[::16]
    one_by_one = max(remez_estimate_lp(zs, 3, [c]).value for c in candidates)
    estimate = remez_estimate_lp(zs, 3, candidates)
    assert estimate.value == pytest.approx(one_by_one, rel=1e-7)
    diagnostics = estimate.diagnostics
    assert diagnostics['lp_solved'] + diagnostics['lp_pruned'] == len(candidates)
    assert diagnostics['lp_solved'] < len(candidates)


def test_more_z_samples_never_increase_estimate():
    candidates = SEGMENT[::32]
    sparse = remez_estimate_lp(HALF_LINE[::64], 2, candidates)
    dense = remez_estimate_lp(HALF_LINE[::8], 2, candidates)
    assert dense.value <= sparse.value * (1.0 + 1e-7)


def test_two_point_set():
    """Z = {-1, 0}, кандидат 1: экстремальный многочлен 2t + 1, оценка 3"""
    estimate = remez_estimate_lp([-1.0, 0.0], 1, [1.0])
    assert estimate.value == pytest.approx(3.0)
    assert estimate.witness_poly(1.0) == pytest.approx(3.0)


def test_three_affinely_independent_points():
    """Для линейных P значение в c равно сумме модулей барицентрических координат c"""
    zs = np.array([[0.0, 0.0], [0.5, 0.0], [0.0, 0.5]])
    estimate = remez_estimate_lp(zs, 1, np.array([[1.0, 0.0], [-0.6, -0.6]]))
    assert not estimate.infinite
    assert estimate.value == pytest.approx(5.8)
    assert estimate.witness_point == pytest.approx((-0.6, -0.6))


def test_brudnyi_ganzburg_tiny_lambda():
    value = brudnyi_ganzburg_bound(1e-17, 2, 2)
    assert math.isfinite(value)
    assert value > 1e30
    assert value >= brudnyi_ganzburg_bound(1e-12, 2, 2)
    assert brudnyi_ganzburg_bound(1e-300, 400, 2) == float('inf')
