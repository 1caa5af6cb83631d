"""Полиномиальные тестовые кривые w(t), t из [-1, 1]"""
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from smoothrig.errors import ValidationError
from smoothrig.poly import MultiPoly

# Сетка параметра для проверки, что образ лежит в шаре
IMAGE_CHECK_POINTS = 1000
BALL_SLACK = 1e-12


@dataclass(frozen=True)
class ParamCurve:
    """Кривая с n полиномиальными компонентами степени <= s"""

    components: Tuple[MultiPoly, ...]
    s: int

    def __post_init__(self):
        object.__setattr__(self, 'components', tuple(self.components))
        if self.s < 1:
            raise ValidationError('InvalidRange', name='s', value=self.s)
        for component in self.components:
            if component.nvars != 1:
                raise ValidationError('DimensionMismatch', expected=1, actual=component.nvars)
            if component.degree > self.s:
                raise ValidationError('InvalidRange', name='component degree', value=component.degree)

    @property
    def dim(self) -> int:
        return len(self.components)

    def evaluate(self, ts) -> np.ndarray:
        """Точки кривой: массив формы (len(ts), n)"""
        ts = np.atleast_1d(np.asarray(ts, dtype=float))
        return np.column_stack([component.values(ts) for component in self.components])

    def max_radius(self, points: int = IMAGE_CHECK_POINTS) -> float:
        image = self.evaluate(np.linspace(-1.0, 1.0, points))
        return float(np.max(np.linalg.norm(image, axis=1)))

    def check_in_ball(self):
        radius = self.max_radius()
        if radius > 1.0 + BALL_SLACK:
            raise ValidationError('ImageLeavesBall', radius=radius)


def chebyshev_nodes(k: int) -> np.ndarray:
    """cos((2j+1)pi/(2k)), j = 0..k-1"""
    j = np.arange(k)
    return np.cos((2 * j + 1) * math.pi / (2 * k))


def fit_curve(points: Sequence[Sequence[float]], s: int) -> ParamCurve:
    """
    Кривая степени <= s через заданные точки

    Точке j сопоставляется узел Чебышёва t_j, каждая координата интерполируется
    многочленом степени k-1 <= s (решение системы Вандермонда).

    Raises:
        ValidationError: TooManyPoints при k > s+1; ImageLeavesBall, если образ
            [-1, 1] выходит из единичного шара
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[0] < 1:
        raise ValidationError('DimensionMismatch', expected='(k, n)', actual=pts.shape)
    k = pts.shape[0]
    if k > s + 1:
        raise ValidationError('TooManyPoints', k=k, limit=s + 1)
    nodes = chebyshev_nodes(k)
    vandermonde = np.vander(nodes, k, increasing=True)
    coeffs = np.linalg.solve(vandermonde, pts)
    curve = ParamCurve(
        components=tuple(MultiPoly.univariate(coeffs[:, axis]) for axis in range(pts.shape[1])),
        s=s,
    )
    curve.check_in_ball()
    return curve
