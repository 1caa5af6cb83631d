"""Модуль фрактальной (клеточной) размерности"""
from smoothrig.fractal.boxdim import (
    PointCloud, covering_number, box_dimension_estimate, rigidity_threshold,
    rigidity_threshold_check, FORMULA_BOXDIM, FORMULA_THRESHOLD, THRESHOLD_CONCLUSION,
)

__all__ = [
    'PointCloud', 'covering_number', 'box_dimension_estimate', 'rigidity_threshold',
    'rigidity_threshold_check', 'FORMULA_BOXDIM', 'FORMULA_THRESHOLD', 'THRESHOLD_CONCLUSION',
]
