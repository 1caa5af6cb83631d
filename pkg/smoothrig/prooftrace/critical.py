"""Критические точки многочленов двух переменных, линейное возмущение и проверка Безу"""
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from smoothrig.config import (
    CRITICAL_GRID, MERGE_RADIUS, NEWTON_ITERATIONS, PERTURBATION_SCALE,
)
from smoothrig.errors import ValidationError
from smoothrig.geometry import box_lattice
from smoothrig.logger import OperationLog
from smoothrig.poly import MultiPoly, partial_derivative

GOLDEN_RATIO = (1.0 + math.sqrt(5.0)) / 2.0
UNIT_BOX = (-1.0, -1.0, 1.0, 1.0)
REFINE_TOL = 1e-10
ACCEPT_SCALE = 1e-8
STABILITY_TOL = 1e-4

FORMULA_BEZOUT = "bezout: at most (d-1)^2 isolated critical points for a generic degree-d polynomial"
VIOLATION_NOTE = (
    "Превышение границы Безу - численный артефакт (дубликаты кластеров или "
    "положительномерное множество критических точек), а не опровержение теоремы"
)


@dataclass
class CriticalPoint:
    """Представитель кластера критических точек"""

    x: float
    y: float
    grad_norm: float
    value: float
    members: int = 1
    domain: Optional[int] = None

    def to_dict(self):
        return {
            'point': [self.x, self.y],
            'grad_norm': self.grad_norm,
            'value': self.value,
            'members': self.members,
            'domain': self.domain if self.domain is not None else 'outside',
        }


@dataclass
class CriticalPointSet:
    """Кластеры критических точек, разнесённые больше чем на merge_radius"""

    points: List[CriticalPoint]
    merge_radius: float
    diagnostics: dict = field(default_factory=dict)

    @property
    def clusters(self) -> int:
        return len(self.points)

    def assign_domains(self, domains):
        """Отнести каждую точку к содержащей её области или к 'outside'"""
        from smoothrig.geometry import locate_domain
        for point in self.points:
            point.domain = locate_domain(domains, (point.x, point.y))
        return self

    def to_dict(self):
        return {
            'clusters': self.clusters,
            'merge_radius': self.merge_radius,
            'points': [point.to_dict() for point in self.points],
            'diagnostics': self.diagnostics,
        }


@dataclass
class BezoutVerdict:
    status: str
    clusters: int
    bound: int
    note: Optional[str] = None

    def to_dict(self):
        return {
            'status': self.status,
            'clusters': self.clusters,
            'bound': self.bound,
            'formula': FORMULA_BEZOUT,
            'note': self.note,
        }


def _gradient_system(p: MultiPoly):
    gx = partial_derivative(p, 0)
    gy = partial_derivative(p, 1)
    return gx, gy, partial_derivative(gx, 0), partial_derivative(gx, 1), partial_derivative(gy, 1)


def find_critical_points(p: MultiPoly, box: Tuple[float, float, float, float] = UNIT_BOX,
                         grid: int = CRITICAL_GRID, merge_radius: float = MERGE_RADIUS,
                         iterations: int = NEWTON_ITERATIONS) -> CriticalPointSet:
    """
    Многостартовый метод Ньютона для системы grad p = 0

    Начальные точки - решётка grid x grid в прямоугольнике box. Шаг считается через
    псевдообратную матрицу Гессе (вырожденные направления не двигаются) и
    ограничивается диагональю прямоугольника. Несошедшиеся и покинувшие box начальные
    точки молча отбрасываются и учитываются в diagnostics.
    """
    if p.nvars != 2:
        raise ValidationError('DimensionMismatch', expected=2, actual=p.nvars)
    if p.degree < 1:
        raise ValidationError('InvalidRange', name='degree', value=p.degree)
    gx, gy, hxx, hxy, hyy = _gradient_system(p)
    xmin, ymin, xmax, ymax = box
    diagonal = math.hypot(xmax - xmin, ymax - ymin)
    accept = ACCEPT_SCALE * (1.0 + p.coefficient_norm())

    seeds = box_lattice(box, max(grid - 1, 1))
    OperationLog.log("prooftrace", 'newton_started', stage='critical', seeds=len(seeds))
    pts = seeds.copy()
    alive = np.ones(len(pts), dtype=bool)
    for _ in range(iterations):
        index = np.nonzero(alive)[0]
        if index.size == 0:
            break
        current = pts[index]
        grad = np.column_stack([gx.values(current), gy.values(current)])
        hxy_v = hxy.values(current)
        hess = np.stack([
            np.column_stack([hxx.values(current), hxy_v]),
            np.column_stack([hxy_v, hyy.values(current)]),
        ], axis=1)
        step = -np.einsum('kij,kj->ki', np.linalg.pinv(hess), grad)
        length = np.linalg.norm(step, axis=1)
        too_long = length > diagonal
        step[too_long] *= (diagonal / length[too_long])[:, None]
        moved = current + step
        escaped = ((moved[:, 0] < xmin - diagonal) | (moved[:, 0] > xmax + diagonal)
                   | (moved[:, 1] < ymin - diagonal) | (moved[:, 1] > ymax + diagonal)
                   | ~np.all(np.isfinite(moved), axis=1))
        pts[index] = np.where(escaped[:, None], current, moved)
        alive[index[escaped]] = False

    index = np.nonzero(alive)[0]
    final = pts[index]
    grad_norm = np.hypot(gx.values(final), gy.values(final)) if index.size else np.zeros(0)
    inside = ((final[:, 0] >= xmin) & (final[:, 0] <= xmax)
              & (final[:, 1] >= ymin) & (final[:, 1] <= ymax)) if index.size else np.zeros(0, bool)
    good = inside & (grad_norm <= accept)
    converged = final[good]
    norms = grad_norm[good]

    reps: List[CriticalPoint] = []
    rep_xy = np.zeros((0, 2))
    for (x, y), norm in zip(converged, norms):
        if rep_xy.shape[0]:
            dist = np.hypot(rep_xy[:, 0] - x, rep_xy[:, 1] - y)
            nearest = int(np.argmin(dist))
            if dist[nearest] <= merge_radius:
                reps[nearest].members += 1
                if norm < reps[nearest].grad_norm:
                    reps[nearest].grad_norm = float(norm)
                continue
        reps.append(CriticalPoint(float(x), float(y), float(norm), p(float(x), float(y))))
        rep_xy = np.vstack([rep_xy, [x, y]])

    diagnostics = {
        'seeds': int(len(seeds)),
        'converged': int(len(converged)),
        'dropped': int(len(seeds) - len(converged)),
        'refine_tol': REFINE_TOL,
        'refined': int(np.sum(norms <= REFINE_TOL)),
        'accept_tol': accept,
    }
    OperationLog.log("prooftrace", 'newton_finished', stage='critical',
                     converged=diagnostics['converged'], dropped=diagnostics['dropped'],
                     clusters=len(reps))
    return CriticalPointSet(points=reps, merge_radius=merge_radius, diagnostics=diagnostics)


def perturb_linear(p: MultiPoly, direction: Tuple[float, float], eps: float) -> MultiPoly:
    """
    p + eps * (a*x + b*y) для единичного вектора (a, b)

    Raises:
        ValidationError: InvalidPerturbation при eps <= 0 или неединичном направлении
    """
    if p.nvars != 2:
        raise ValidationError('DimensionMismatch', expected=2, actual=p.nvars)
    if not eps > 0:
        raise ValidationError('InvalidPerturbation', reason=f"eps={eps}")
    a, b = direction
    if abs(math.hypot(a, b) - 1.0) > 1e-9:
        raise ValidationError('InvalidPerturbation', reason=f"|(a, b)| = {math.hypot(a, b)}")
    return p + MultiPoly(2, {(1, 0): eps * a, (0, 1): eps * b})


def default_direction() -> Tuple[float, float]:
    """(1, phi)/|(1, phi)|, phi - золотое сечение"""
    norm = math.hypot(1.0, GOLDEN_RATIO)
    return 1.0 / norm, GOLDEN_RATIO / norm


def default_eps(p: MultiPoly, scale: float = PERTURBATION_SCALE) -> float:
    """scale, умноженный на максимум модулей коэффициентов"""
    norm = p.coefficient_norm()
    return scale * (norm if norm > 0 else 1.0)


def default_perturbation(p: MultiPoly, scale: float = PERTURBATION_SCALE) -> MultiPoly:
    return perturb_linear(p, default_direction(), default_eps(p, scale))


def bezout_check(cps: CriticalPointSet, d: int) -> BezoutVerdict:
    """
    Сравнить число кластеров с границей Безу (d-1)^2

    Вердикт violation всегда помечается как численный артефакт.
    """
    bound = (d - 1) ** 2
    if cps.clusters <= bound:
        return BezoutVerdict('consistent', cps.clusters, bound)
    OperationLog.log("prooftrace", 'bezout_violation', level='WARNING', stage='bezout',
                     count=cps.clusters, bound=bound)
    return BezoutVerdict('violation', cps.clusters, bound, VIOLATION_NOTE)


def perturbation_stability(p: MultiPoly, eps: float, direction=None, box=UNIT_BOX,
                           grid: int = CRITICAL_GRID, tol: float = STABILITY_TOL) -> dict:
    """
    Сохраняются ли критические точки при уменьшении eps вдвое

    Каждая точка прогона с eps должна найтись в пределах tol среди точек прогона с eps/2.
    """
    direction = direction or default_direction()
    first = find_critical_points(perturb_linear(p, direction, eps), box, grid)
    second = find_critical_points(perturb_linear(p, direction, eps / 2.0), box, grid)
    others = np.array([[q.x, q.y] for q in second.points]).reshape(-1, 2)
    unmatched = []
    for point in first.points:
        if others.shape[0] == 0 or np.min(np.hypot(others[:, 0] - point.x, others[:, 1] - point.y)) > tol:
            unmatched.append([point.x, point.y])
    return {
        'eps': eps,
        'clusters': first.clusters,
        'clusters_half_eps': second.clusters,
        'unmatched': unmatched,
        'stable': not unmatched,
        'tolerance': tol,
    }
