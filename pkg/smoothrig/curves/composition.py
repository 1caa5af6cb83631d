"""Композиция f(w(t)), эмпирическая постоянная цепного правила и пересечения кривой с Z"""
from typing import List

import numpy as np

from smoothrig.config import CURVE_STEPS, RHS_THRESHOLD
from smoothrig.curves.fitting import ParamCurve
from smoothrig.errors import ValidationError
from smoothrig.geometry import OvalConfiguration
from smoothrig.logger import OperationLog
from smoothrig.poly import MultiPoly, compose, derivative, derivative_norm_values
from smoothrig.rigidity.divided import rigidity_floor

FORMULA_COMPOSITION = (
    "chain_rule: sum_{k=lower}^{d+1} ||f^(k)(w(t))|| >= c_hat * |g^(d+1)(t)|, g = f(w)"
)
FORMULA_COROLLARY = "test_curve: c_hat * gamma * (d+1)!/2^(d+1)"


def lower_order(d: int, s: int) -> int:
    """
    Наименьший порядок производных f, входящих в g^(d+1): ceil((d+1)/s)

    Совпадает с [(d+1)/s]+1, когда s не делит d+1; при s = 1 остаётся один порядок d+1.
    """
    return max(1, -(-(d + 1) // s))


def composition_report(f: MultiPoly, omega: ParamCurve, d: int, tgrid: int) -> dict:
    """
    Сравнить левую и правую части неравенства цепного правила на сетке параметра

    Returns:
        Словарь: g, lower_order, точки (t, LHS, RHS), c_hat (минимум LHS/RHS при
        RHS > порога) или None и флаг all_degenerate
    """
    if f.nvars != omega.dim:
        raise ValidationError('DimensionMismatch', expected=f.nvars, actual=omega.dim)
    if tgrid < 2:
        raise ValidationError('InvalidRange', name='tgrid', value=tgrid)

    g = compose(f, omega.components)
    g_top = derivative(g, (d + 1,))
    ts = np.linspace(-1.0, 1.0, tgrid)
    image = omega.evaluate(ts)
    lower = lower_order(d, omega.s)

    lhs = np.zeros(tgrid)
    for k in range(lower, d + 2):
        lhs += derivative_norm_values(f, k, image)
    rhs = np.abs(g_top.values(ts))

    active = rhs > RHS_THRESHOLD
    c_hat = float(np.min(lhs[active] / rhs[active])) if np.any(active) else None
    OperationLog.log("curves", 'composition_finished', stage='composition',
                     degree=g.degree, c_hat=c_hat)
    return {
        'g': g,
        'g_degree': g.degree,
        'lower_order': lower,
        'upper_order': d + 1,
        'points': [
            {'t': float(t), 'lhs': float(l), 'rhs': float(r)} for t, l, r in zip(ts, lhs, rhs)
        ],
        'c_hat': c_hat,
        'all_degenerate': c_hat is None,
        'formula': FORMULA_COMPOSITION,
    }


def corollary_bound(c_hat, gamma: float, d: int) -> float:
    """
    Оценка суммы норм производных для кривой, пересекающей Z в d+1 точке и
    проходящей через z0 с |f(z0)| >= gamma: c_hat * gamma * (d+1)!/2^(d+1)
    """
    if c_hat is None:
        return 0.0
    return float(c_hat) * float(gamma) * rigidity_floor(d)


def _crossing_params(polyline: np.ndarray, ring: np.ndarray, eps: float = 1e-14) -> np.ndarray:
    """
    Параметры u in [0, 1] на звеньях ломаной, где они пересекают рёбра кольца

    Returns:
        Пары (индекс звена, u) в виде массива формы (m, 2)
    """
    p = polyline[:-1][:, None, :]
    r = (polyline[1:] - polyline[:-1])[:, None, :]
    q = ring[:-1][None, :, :]
    s = (ring[1:] - ring[:-1])[None, :, :]
    denom = r[..., 0] * s[..., 1] - r[..., 1] * s[..., 0]
    qp = q - p
    with np.errstate(divide='ignore', invalid='ignore'):
        u = (qp[..., 0] * s[..., 1] - qp[..., 1] * s[..., 0]) / denom
        v = (qp[..., 0] * r[..., 1] - qp[..., 1] * r[..., 0]) / denom
    mask = ((np.abs(denom) > eps) & (u >= -1e-12) & (u <= 1.0 + 1e-12)
            & (v >= -1e-12) & (v <= 1.0 + 1e-12))
    segment, _ = np.nonzero(mask)
    return np.column_stack([segment, u[mask]])


def crossing_count(omega: ParamCurve, config: OvalConfiguration, tol: float = 1e-9,
                   steps: int = CURVE_STEPS) -> int:
    """
    Число значений параметра, при которых w(t) лежит на границе какого-либо овала

    Кривая заменяется ломаной из steps звеньев, ищутся пересечения звеньев с рёбрами
    овалов; значения параметра, отстоящие друг от друга меньше чем на
    max(tol, 2/steps), считаются одним пересечением.
    """
    if omega.dim != 2:
        raise ValidationError('DimensionMismatch', expected=2, actual=omega.dim)
    ts = np.linspace(-1.0, 1.0, steps + 1)
    polyline = omega.evaluate(ts)
    hits: List[float] = []
    for oval in config.ovals:
        ring = np.asarray(oval.vertices + (oval.vertices[0],), dtype=float)
        for segment, u in _crossing_params(polyline, ring):
            i = int(segment)
            hits.append(float(ts[i] + u * (ts[i + 1] - ts[i])))
    if not hits:
        return 0
    hits.sort()
    gap = max(tol, 2.0 / steps)
    count = 1
    for previous, current in zip(hits, hits[1:]):
        if current - previous > gap:
            count += 1
    return count
