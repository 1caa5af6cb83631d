"""Модуль оценок жёсткости"""
from smoothrig.rigidity.divided import (
    divided_difference, rigidity_1d_bound, rigidity_point_count, rigidity_floor, factorial,
)
from smoothrig.rigidity.bounds import (
    rigidity_from_remez, rigidity_topological_literal, rigidity_topological_composed,
    interior_line_bound, line_zeros, FORMULA_INTERIOR_LINE,
)
from smoothrig.rigidity.report import (
    RigidityReport, BoundEntry, build_config_report, build_1d_report,
)

__all__ = [
    'divided_difference', 'rigidity_1d_bound', 'rigidity_point_count', 'rigidity_floor',
    'factorial', 'rigidity_from_remez', 'rigidity_topological_literal',
    'rigidity_topological_composed', 'interior_line_bound', 'line_zeros', 'FORMULA_INTERIOR_LINE',
    'RigidityReport', 'BoundEntry', 'build_config_report', 'build_1d_report',
]
