"""Численная трассировка доказательства: критические точки, Безу, принцип Дирихле"""
from smoothrig.prooftrace.critical import (
    CriticalPoint, CriticalPointSet, BezoutVerdict, find_critical_points, perturb_linear,
    default_perturbation, default_direction, default_eps, bezout_check,
    perturbation_stability,
)
from smoothrig.prooftrace.pigeonhole import domain_pigeonhole_report

__all__ = [
    'CriticalPoint', 'CriticalPointSet', 'BezoutVerdict', 'find_critical_points',
    'perturb_linear', 'default_perturbation', 'default_direction', 'default_eps',
    'bezout_check', 'perturbation_stability', 'domain_pigeonhole_report',
]
