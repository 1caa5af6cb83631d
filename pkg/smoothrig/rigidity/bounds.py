"""Нижние оценки жёсткости: через константу Ремеза, через площади областей, через сечение прямой"""
from typing import Callable, List

import numpy as np

from smoothrig.config import BISECTION_TOL, LINE_SAMPLES
from smoothrig.errors import SolverError, ValidationError
from smoothrig.logger import OperationLog
from smoothrig.rigidity.divided import factorial, rigidity_1d_bound

FORMULA_FROM_REMEZ = "from_remez: (d+1)!/2 * inverse_remez"
FORMULA_TOPOLOGICAL_LITERAL = "topological_literal: 1/(d+1)! * (4n/mu)^d"
FORMULA_TOPOLOGICAL_COMPOSED = "topological_composed: (d+1)!/2 * (mu/(4n))^d"
FORMULA_INTERIOR_LINE = "interior_line: one_dimensional bound of f restricted to the line through z0 and an interior point"


def _check_mu(mu):
    if not mu > 0:
        raise ValidationError('MuNonPositive', mu=mu)


def rigidity_from_remez(inverse_remez: float, d: int) -> float:
    """(d+1)!/2 * обратная константа Ремеза"""
    if not 0.0 <= inverse_remez <= 1.0:
        raise ValidationError('InvalidRange', name='inverse_remez', value=inverse_remez)
    return factorial(d + 1) / 2.0 * inverse_remez


def rigidity_topological_literal(mu: float, d: int, n: int) -> float:
    """Буквальное выражение топологической теоремы: (1/(d+1)!) * (4n/mu)^d"""
    _check_mu(mu)
    return (4.0 * n / mu) ** d / factorial(d + 1)


def rigidity_topological_composed(mu: float, d: int, n: int) -> float:
    """Композиция оценки через Ремеза с топологической оценкой: (d+1)!/2 * (mu/(4n))^d"""
    _check_mu(mu)
    return factorial(d + 1) / 2.0 * (mu / (4.0 * n)) ** d


def _sample(f_sampler, points) -> np.ndarray:
    try:
        values = np.asarray(f_sampler(np.atleast_2d(points)), dtype=float).reshape(-1)
    except Exception as e:
        raise SolverError('SamplerFailure', reason=str(e))
    if not np.all(np.isfinite(values)):
        raise SolverError('SamplerFailure', reason="нечисловые значения")
    return values


def _chord(z0: np.ndarray, direction: np.ndarray):
    """Параметры пересечения прямой z0 + t*direction (|direction| = 1) с единичной сферой"""
    b = float(direction @ z0)
    c = float(z0 @ z0) - 1.0
    disc = max(b * b - c, 0.0)
    root = np.sqrt(disc)
    return -b - root, -b + root


def line_zeros(values: np.ndarray, params: np.ndarray, evaluate: Callable[[float], float],
               tol: float = BISECTION_TOL) -> List[float]:
    """
    Нули по смене знака на сетке с уточнением бисекцией

    Точный ноль в узле засчитывается, если соседние ненулевые значения имеют разные
    знаки и ноль изолирован (одна точка); участки тождественного нуля пропускаются.
    """
    zeros = []
    last = None
    for i, value in enumerate(values):
        if value == 0.0:
            continue
        if last is not None and np.sign(values[last]) != np.sign(value):
            gap = i - last
            if gap == 1:
                lo, hi = params[last], params[i]
                f_lo = values[last]
                while hi - lo > tol:
                    mid = 0.5 * (lo + hi)
                    f_mid = evaluate(mid)
                    if f_mid == 0.0:
                        lo = hi = mid
                        break
                    if np.sign(f_mid) == np.sign(f_lo):
                        lo, f_lo = mid, f_mid
                    else:
                        hi = mid
                zeros.append(0.5 * (lo + hi))
            elif gap == 2:
                zeros.append(float(params[last + 1]))
        last = i
    return zeros


def interior_line_bound(f_sampler: Callable, z0, zint, d: int, samples: int = LINE_SAMPLES) -> float:
    """
    Оценка жёсткости через ограничение f на прямую через z0 и внутреннюю точку Z

    Прямая продолжается до границы шара, f считается на равномерной сетке параметра,
    нули уточняются бисекцией, берутся d+1 нулей, ближайших к zint. Параметр сдвигается
    так, чтобы хорда шара (длина <= 2) легла в [-1, 1].

    Args:
        f_sampler: функция на массиве точек формы (m, n), возвращающая m значений
        z0: точка с |f(z0)| = 1
        zint: внутренняя точка Z
        d: порядок жёсткости
        samples: число точек сетки на хорде

    Returns:
        Оценку одномерной жёсткости или 0, если d+1 нулей не найдено
    """
    z0 = np.asarray(z0, dtype=float)
    zint = np.asarray(zint, dtype=float)
    offset = zint - z0
    length = float(np.linalg.norm(offset))
    if length == 0.0:
        raise ValidationError('DegenerateNodes', reason="z0 совпадает с внутренней точкой")
    direction = offset / length
    t_lo, t_hi = _chord(z0, direction)
    center = 0.5 * (t_lo + t_hi)

    params = np.linspace(t_lo, t_hi, samples)
    values = _sample(f_sampler, z0[None, :] + params[:, None] * direction[None, :])

    def evaluate(t):
        return float(_sample(f_sampler, (z0 + t * direction)[None, :])[0])

    zeros = line_zeros(values, params, evaluate)
    OperationLog.log("rigidity", 'line_zeros_found', stage='interior_line',
                     count=len(zeros), required=d + 1)
    if len(zeros) < d + 1:
        return 0.0
    nearest = sorted(sorted(zeros, key=lambda t: abs(t - length))[:d + 1])
    if len(set(nearest)) < d + 1 or 0.0 in nearest:
        return 0.0
    fz0 = evaluate(0.0)
    return rigidity_1d_bound([t - center for t in nearest], -center, fz0, d)
