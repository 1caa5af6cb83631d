"""Модуль оценок константы Ремеза"""
from smoothrig.remez.bounds import (
    remez_bound_topological, brudnyi_ganzburg_bound, harnack_max_ovals,
    empirical_remez_ratio, required_ovals,
    FORMULA_TOPOLOGICAL, FORMULA_BRUDNYI_GANZBURG, FORMULA_HARNACK, FORMULA_EMPIRICAL_RATIO,
)
from smoothrig.remez.estimator import (
    RemezEstimate, remez_estimate_lp, inverse_remez, FORMULA_LP, FORMULA_INVERSE,
)

__all__ = [
    'remez_bound_topological', 'brudnyi_ganzburg_bound', 'harnack_max_ovals',
    'empirical_remez_ratio', 'required_ovals', 'RemezEstimate', 'remez_estimate_lp',
    'inverse_remez', 'FORMULA_TOPOLOGICAL', 'FORMULA_BRUDNYI_GANZBURG', 'FORMULA_HARNACK',
    'FORMULA_EMPIRICAL_RATIO', 'FORMULA_LP', 'FORMULA_INVERSE',
]
