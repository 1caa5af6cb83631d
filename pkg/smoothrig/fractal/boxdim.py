"""Числа покрытия и оценка клеточной (box) размерности облака точек"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from smoothrig.errors import ValidationError
from smoothrig.logger import OperationLog

FORMULA_BOXDIM = "box_dimension: least-squares slope of log M(eps) against log(1/eps)"
FORMULA_THRESHOLD = "rigidity_threshold: beta > n - 1/(d+1) implies RG_d(Z) >= M(n,d) > 0"
THRESHOLD_CONCLUSION = "RG_d(Z) >= M = M(n,d) > 0 (qualitative; M(n,d) is not computed)"

BALL_SLACK = 1e-12


@dataclass(frozen=True)
class PointCloud:
    """Непустое облако точек в замкнутом единичном шаре B^n"""

    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim == 1:
            pts = pts[:, None]
        if pts.ndim != 2 or pts.shape[0] == 0:
            raise ValidationError('InvalidRange', name='points', value=pts.shape)
        if np.any(np.einsum('ij,ij->i', pts, pts) > 1.0 + BALL_SLACK):
            raise ValidationError('OutsideUnitBall', id='cloud')
        object.__setattr__(self, 'points', pts)

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def __len__(self):
        return self.points.shape[0]


def covering_number(cloud: PointCloud, eps: float) -> int:
    """
    Число занятых клеток сетки со стороной eps, привязанной к началу координат

    Заменяет число покрытия шарами радиуса eps с точностью до множителей,
    зависящих только от размерности.
    """
    if not eps > 0:
        raise ValidationError('DegenerateScales', reason=f"eps={eps}")
    cells = np.floor(cloud.points / eps).astype(np.int64)
    return int(np.unique(cells, axis=0).shape[0])


def _check_scales(eps_list: Sequence[float]) -> np.ndarray:
    scales = np.asarray(eps_list, dtype=float)
    if scales.ndim != 1 or scales.size < 3:
        raise ValidationError('DegenerateScales', reason="нужно не меньше трёх масштабов")
    if np.any(scales <= 0):
        raise ValidationError('DegenerateScales', reason="масштабы должны быть положительны")
    if np.any(np.diff(scales) >= 0):
        raise ValidationError('DegenerateScales', reason="масштабы должны строго убывать")
    return scales


def box_dimension_estimate(cloud: PointCloud, eps_list: Sequence[float]) -> dict:
    """
    Наклон прямой МНК для log M(eps) против log(1/eps)

    Returns:
        Словарь: slope, residual (среднеквадратичная невязка), counts по масштабам
    """
    scales = _check_scales(eps_list)
    counts = np.array([covering_number(cloud, eps) for eps in scales], dtype=float)
    x = np.log(1.0 / scales)
    y = np.log(counts)
    slope, intercept = np.polyfit(x, y, 1)
    residual = float(np.sqrt(np.mean((y - (slope * x + intercept)) ** 2)))
    OperationLog.log("fractal", 'boxdim_finished', stage='boxdim',
                     slope=float(slope), residual=residual, scales=len(scales))
    return {
        'slope': float(slope),
        'intercept': float(intercept),
        'residual': residual,
        'scales': [float(eps) for eps in scales],
        'counts': [int(c) for c in counts],
        'formula': FORMULA_BOXDIM,
    }


def rigidity_threshold(n: int, d: int) -> Fraction:
    """Порог n - 1/(d+1) в точной рациональной арифметике"""
    if n < 1 or d < 0:
        raise ValidationError('InvalidRange', name='(n, d)', value=(n, d))
    return Fraction(n) - Fraction(1, d + 1)


def rigidity_threshold_check(beta: float, n: int, d: int) -> bool:
    """
    Верно ли beta > n - 1/(d+1); сравнение без округления порога

    beta берётся как кратчайшая десятичная запись числа: 1.8 означает ровно 9/5,
    а не ближайшую к нему двоичную дробь.
    """
    threshold = rigidity_threshold(n, d)
    beta = float(beta)
    if not math.isfinite(beta):
        return beta > 0
    return Fraction(repr(beta)) > threshold
