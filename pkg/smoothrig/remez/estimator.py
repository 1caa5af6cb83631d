"""Численная оценка константы Ремеза дискретного множества через линейное программирование"""
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np
from scipy.optimize import linprog

from smoothrig.config import LP_TOLERANCE, UNBOUNDED_THRESHOLD
from smoothrig.errors import SolverError, ValidationError
from smoothrig.logger import OperationLog
from smoothrig.poly import MultiPoly, basis_size, graded_exponents, monomial_matrix

FORMULA_LP = "remez_lp: max_x0 max_c { P_c(x0) : |P_c(z)| <= 1 on Z samples }"
FORMULA_INVERSE = "inverse_remez: 1 / R_d(Z), 0 when infinite"

# Статусы scipy.optimize.linprog
_STATUS_OK = 0
_STATUS_UNBOUNDED = 3

# Кандидат отбрасывается, когда верхняя оценка не превышает текущий максимум
PRUNE_SLACK = 1e-9
DUAL_RESIDUAL = 1e-7


@dataclass
class RemezEstimate:
    """Нижняя оценка константы Ремеза по выборке Z и сетке кандидатов"""

    degree: int
    value: float
    infinite: bool
    witness_poly: Optional[MultiPoly]
    witness_point: Optional[Tuple[float, ...]]
    diagnostics: dict = field(default_factory=dict)

    def to_dict(self):
        from smoothrig.parser.poly_parser import poly_to_dict
        return {
            'degree': self.degree,
            'value': None if self.infinite else self.value,
            'infinite': self.infinite,
            'formula': FORMULA_LP,
            'witness_poly': poly_to_dict(self.witness_poly) if self.witness_poly is not None else None,
            'witness_point': list(self.witness_point) if self.witness_point is not None else None,
            'diagnostics': self.diagnostics,
        }


def _as_points(points) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1:
        pts = pts[:, None]
    return pts


def _point(row) -> Tuple[float, ...]:
    return tuple(float(v) for v in row)


def _degenerate_witness(vandermonde: np.ndarray, tol: float):
    """
    Вектор коэффициентов многочлена, обращающегося в ноль на всей выборке, или None

    Ранг матрицы мономов меньше размерности базиса тогда и только тогда, когда
    выборка лежит в нулевом множестве ненулевого многочлена степени d.
    """
    rows, cols = vandermonde.shape
    if rows < cols:
        _, _, vt = np.linalg.svd(vandermonde, full_matrices=True)
        return vt[-1]
    _, singular, vt = np.linalg.svd(vandermonde, full_matrices=False)
    if singular[-1] <= tol * max(singular[0], 1.0):
        return vt[-1]
    return None


def remez_estimate_lp(zsamples, d: int, candidates, tol: float = LP_TOLERANCE) -> RemezEstimate:
    """
    Оценить R_d(Z) снизу

    Для каждого кандидата x0 решается ЛП: максимизировать P_c(x0) при -1 <= P_c(z) <= 1
    для всех z из выборки. Результат - максимум по кандидатам; он не убывает при
    добавлении кандидатов и не растёт при добавлении точек Z.

    ЛП решаются не для всех кандидатов: у каждого есть верхняя оценка - l1-норма
    допустимого двойственного вектора (сначала по наименьшим квадратам, затем сдвиг
    двойственного решения уже решённой ЛП). Кандидаты обходятся по убыванию этой
    оценки, обход останавливается, когда она не превышает найденного максимума,
    поэтому результат совпадает с полным перебором.

    Raises:
        ValidationError: пустые выборки, несовпадение размерностей
        SolverError: SolverFailure, если решатель не сошёлся
    """
    zs = _as_points(zsamples)
    cands = _as_points(candidates)
    if zs.size == 0 or cands.size == 0:
        raise ValidationError('InvalidRange', name='samples', value=0)
    if zs.shape[1] != cands.shape[1]:
        raise ValidationError('DimensionMismatch', expected=zs.shape[1], actual=cands.shape[1])
    n = zs.shape[1]
    size = basis_size(n, d)
    exponents = graded_exponents(n, d)
    vandermonde = monomial_matrix(zs, exponents)
    objective_rows = monomial_matrix(cands, exponents)

    OperationLog.log("remez", 'lp_sweep_started', stage='lp', degree=d,
                     samples=len(zs), candidates=len(cands), basis=size)
    diagnostics = {
        'z_samples': int(len(zs)),
        'candidates': int(len(cands)),
        'basis_size': int(size),
        'lp_solved': 0,
        'lp_iterations': 0,
    }

    null_vector = _degenerate_witness(vandermonde, tol)
    if null_vector is not None:
        witness = MultiPoly.from_coefficients(n, exponents, null_vector)
        at_candidates = np.abs(objective_rows @ null_vector)
        best = int(np.argmax(at_candidates))
        OperationLog.log("remez", 'lp_degenerate', stage='lp', degree=d)
        diagnostics['degenerate_rank'] = int(np.linalg.matrix_rank(vandermonde))
        return RemezEstimate(d, float("inf"), True, witness, _point(cands[best]), diagnostics)

    a_ub = np.vstack([vandermonde, -vandermonde])
    b_ub = np.ones(2 * len(zs))
    bounds = [(None, None)] * size
    options = {'primal_feasibility_tolerance': max(tol, 1e-10),
               'dual_feasibility_tolerance': max(tol, 1e-10)}

    # Столбец q_c - двойственный вектор наименьших квадратов: V^T q_c = m(c)
    lsq_duals = np.linalg.pinv(vandermonde.T) @ objective_rows.T
    upper = np.abs(lsq_duals).sum(axis=0)
    pending = np.ones(len(cands), dtype=bool)

    best_value = 1.0
    best_coeffs = np.zeros(size)
    best_coeffs[exponents.index((0,) * n)] = 1.0
    best_point = _point(cands[0])
    while pending.any():
        index = int(np.argmax(np.where(pending, upper, -np.inf)))
        if upper[index] <= best_value * (1.0 + PRUNE_SLACK):
            break
        pending[index] = False
        row = objective_rows[index]
        result = linprog(-row, A_ub=a_ub, b_ub=b_ub, bounds=bounds, method='highs',
                         options=options)
        diagnostics['lp_solved'] += 1
        diagnostics['lp_iterations'] += int(getattr(result, 'nit', 0) or 0)
        if result.status == _STATUS_UNBOUNDED:
            OperationLog.log("remez", 'lp_unbounded', stage='lp', point=tuple(cands[index]))
            return RemezEstimate(d, float('inf'), True, None, _point(cands[index]), diagnostics)
        if result.status != _STATUS_OK:
            raise SolverError('SolverFailure', tolerance=tol, reason=result.message)
        value = -float(result.fun)
        if value > UNBOUNDED_THRESHOLD:
            OperationLog.log("remez", 'lp_unbounded', stage='lp', point=tuple(cands[index]))
            witness = MultiPoly.from_coefficients(n, exponents, result.x)
            return RemezEstimate(d, float('inf'), True, witness, _point(cands[index]), diagnostics)
        if value > best_value:
            best_value, best_coeffs, best_point = value, result.x, _point(cands[index])

        # Решение допустимо и для остальных кандидатов: |P(c)| - оценка снизу
        at_candidates = objective_rows @ result.x
        reached = int(np.argmax(np.abs(at_candidates)))
        if abs(at_candidates[reached]) > best_value:
            best_value = float(abs(at_candidates[reached]))
            best_coeffs = np.sign(at_candidates[reached]) * result.x
            best_point = _point(cands[reached])

        # Двойственный вектор y: V^T y = m(x0); y + q_c - q_x0 допустим для кандидата c,
        # и его l1-норма ограничивает значение ЛП в c сверху
        marginals = np.asarray(result.ineqlin.marginals)
        dual = marginals[len(zs):] - marginals[:len(zs)]
        residual = np.max(np.abs(vandermonde.T @ dual - row))
        if residual > DUAL_RESIDUAL * (1.0 + np.max(np.abs(row))):
            continue
        shifted = (dual - lsq_duals[:, index])[:, None] + lsq_duals
        upper = np.minimum(upper, np.abs(shifted).sum(axis=0))

    diagnostics['lp_pruned'] = int(pending.sum())
    OperationLog.log("remez", 'lp_sweep_finished', stage='lp', value=best_value,
                     iterations=diagnostics['lp_iterations'], solved=diagnostics['lp_solved'])
    witness = MultiPoly.from_coefficients(n, exponents, best_coeffs)
    return RemezEstimate(d, best_value, False, witness, best_point, diagnostics)


def inverse_remez(estimate: RemezEstimate) -> float:
    """Обратная константа Ремеза: 1/value, 0 в вырожденном случае"""
    if estimate.infinite or not np.isfinite(estimate.value):
        return 0.0
    return 1.0 / estimate.value
