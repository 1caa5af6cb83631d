"""Модуль многочленов многих переменных"""
from smoothrig.poly.multipoly import (
    MultiPoly, eval_poly, partial_derivative, derivative, multi_indices,
    derivative_norm_pointwise, derivative_norm_values, derivative_norm_global,
    compose, basis_size, graded_exponents, monomial_matrix,
)
from smoothrig.poly.chebyshev import chebyshev, chebyshev_value

__all__ = [
    'MultiPoly', 'eval_poly', 'partial_derivative', 'derivative', 'multi_indices',
    'derivative_norm_pointwise', 'derivative_norm_values', 'derivative_norm_global',
    'compose', 'basis_size', 'graded_exponents', 'monomial_matrix',
    'chebyshev', 'chebyshev_value',
]
