"""Модуль тестовых кривых"""
from smoothrig.curves.fitting import ParamCurve, fit_curve, chebyshev_nodes
from smoothrig.curves.composition import (
    composition_report, corollary_bound, crossing_count, lower_order,
    FORMULA_COMPOSITION, FORMULA_COROLLARY,
)

__all__ = [
    'ParamCurve', 'fit_curve', 'chebyshev_nodes', 'composition_report', 'corollary_bound',
    'crossing_count', 'lower_order', 'FORMULA_COMPOSITION', 'FORMULA_COROLLARY',
]
