"""Разделённые разности и одномерные оценки жёсткости"""
import math
from typing import Sequence

import numpy as np

from smoothrig.config import MAX_FACTORIAL_DEGREE
from smoothrig.errors import ValidationError

FORMULA_ONE_DIMENSIONAL = "one_dimensional: (d+1)! * |f[x_0..x_d, z0]|"
FORMULA_POINT_COUNT = "point_count: (d+1)!/2^(d+1) if #Z >= d+1 distinct points, else 0"


def factorial(k: int) -> float:
    """k! в плавающей точке; k ограничено MAX_FACTORIAL_DEGREE + 1"""
    if k - 1 > MAX_FACTORIAL_DEGREE:
        raise ValidationError('DegreeTooLarge', d=k - 1, limit=MAX_FACTORIAL_DEGREE)
    return float(math.factorial(k))


def rigidity_floor(d: int) -> float:
    """(d+1)!/2^(d+1): нижняя граница жёсткости для d+1 точки на [-1, 1]"""
    return factorial(d + 1) / 2.0 ** (d + 1)


def divided_difference(xs: Sequence[float], fs: Sequence[float]) -> float:
    """
    Разделённая разность f[x_0, ..., x_k] по рекуррентной формуле Ньютона

    Raises:
        ValidationError: DuplicateNodes, если узлы не возрастают строго
    """
    x = np.asarray(xs, dtype=float)
    table = np.asarray(fs, dtype=float).copy()
    if x.ndim != 1 or x.size < 1 or x.size != table.size:
        raise ValidationError('DimensionMismatch', expected=len(xs), actual=len(fs))
    if np.any(np.diff(x) <= 0):
        raise ValidationError('DuplicateNodes')
    # На шаге order в table[i] лежит f[x_i, ..., x_{i+order}]
    for order in range(1, x.size):
        table[:-order] = (table[1:x.size - order + 1] - table[:-order]) / (x[order:] - x[:-order])
    return float(table[0])


def rigidity_1d_bound(xs: Sequence[float], z0: float, fz0: float, d: int) -> float:
    """
    Нижняя оценка ||f^(d+1)|| для f, обращающейся в ноль в узлах xs, с f(z0) = fz0

    Равна (d+1)! * |разделённая разность по узлам xs U {z0}|. Если все узлы и z0 лежат
    в [-1, 1] и |fz0| = 1, результат не меньше (d+1)!/2^(d+1).

    Raises:
        ValidationError: DegenerateNodes (не d+1 различных узлов или z0 среди узлов)
    """
    nodes = [float(x) for x in xs]
    if len(nodes) != d + 1:
        raise ValidationError('DegenerateNodes', reason=f"нужно {d + 1} нулей, получено {len(nodes)}")
    if len(set(nodes)) != len(nodes):
        raise ValidationError('DegenerateNodes', reason="повторяющиеся нули")
    if float(z0) in nodes:
        raise ValidationError('DegenerateNodes', reason="z0 совпадает с нулём")
    pairs = sorted([(x, 0.0) for x in nodes] + [(float(z0), float(fz0))])
    value = factorial(d + 1) * abs(divided_difference([p[0] for p in pairs], [p[1] for p in pairs]))
    return max(value, 0.0)


def rigidity_point_count(points: Sequence[float], d: int) -> float:
    """
    Жёсткость конечного множества на отрезке по числу различных точек

    Не более d точек: жёсткость равна 0 (интерполяционный многочлен степени d
    обнуляет (d+1)-ю производную). Не менее d+1 точки: не меньше (d+1)!/2^(d+1).
    """
    distinct = len(set(float(p) for p in points))
    if distinct <= d:
        return 0.0
    return rigidity_floor(d)
