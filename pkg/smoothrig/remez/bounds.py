"""Замкнутые оценки типа Ремеза"""
import math

import numpy as np

from smoothrig.errors import ValidationError
from smoothrig.poly import MultiPoly, chebyshev_value

FORMULA_TOPOLOGICAL = "remez_topological: (4n/mu)^d, hypothesis ovals >= (d-1)^n + 1"
FORMULA_BRUDNYI_GANZBURG = "brudnyi_ganzburg: T_d((1 + (1-lambda)^(1/n)) / (1 - (1-lambda)^(1/n)))"
FORMULA_HARNACK = "harnack: (d-1)(d-2)/2 + 1 ovals at most for a degree-d plane curve"
FORMULA_EMPIRICAL_RATIO = "empirical_ratio: max_candidates |P| / max_boundary |P|"


def required_ovals(d: int, n: int) -> int:
    """Минимальное число овалов, при котором верна топологическая оценка: (d-1)^n + 1"""
    return (d - 1) ** n + 1


def remez_bound_topological(mu: float, d: int, n: int, count: int) -> float:
    """
    Топологическая оценка константы Ремеза (4n/mu)^d; при n = 2 это (8/mu)^d

    Raises:
        ValidationError: MuNonPositive; TooFewOvals, если count < (d-1)^n + 1
    """
    if d < 1 or n < 1:
        raise ValidationError('InvalidRange', name='(d, n)', value=(d, n))
    if not mu > 0:
        raise ValidationError('MuNonPositive', mu=mu)
    required = required_ovals(d, n)
    if count < required:
        raise ValidationError('TooFewOvals', count=count, required=required)
    return (4.0 * n / mu) ** d


def brudnyi_ganzburg_bound(lam: float, d: int, n: int) -> float:
    """
    Классическая оценка Брудного-Ганзбурга по доле меры lambda = |Omega| / |V|

    Монотонно убывает по lambda и равна 1 при lambda = 1.
    """
    if not 0.0 < lam <= 1.0:
        raise ValidationError('LambdaOutOfRange', value=lam)
    if d < 0 or n < 1:
        raise ValidationError('InvalidRange', name='(d, n)', value=(d, n))
    # 1 - (1-lambda)^(1/n) без потери точности при малых lambda
    gap = 1.0 if lam == 1.0 else -math.expm1(math.log1p(-lam) / n)
    if gap <= 0.0:
        return float('inf')
    value = chebyshev_value(d, (2.0 - gap) / gap)
    return value if math.isfinite(value) else float('inf')


def harnack_max_ovals(d: int) -> int:
    """Наибольшее число овалов плоской кривой степени d"""
    if d < 1:
        raise ValidationError('InvalidRange', name='d', value=d)
    return (d - 1) * (d - 2) // 2 + 1


def empirical_remez_ratio(p: MultiPoly, boundary, candidates) -> float:
    """
    max |P| по кандидатам, делённый на max |P| по точкам границы

    Если P обращается в ноль на всех точках границы, возвращает inf.
    """
    top = float(np.max(np.abs(p.values(candidates))))
    bottom = float(np.max(np.abs(p.values(boundary))))
    if bottom == 0.0:
        return float('inf') if top > 0 else 1.0
    return top / bottom
