"""Овалы (простые многоугольники) и проверка конфигураций"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from smoothrig.errors import ValidationError
from smoothrig.logger import OperationLog

Point = Tuple[float, float]

# Сдвиг горизонтального луча, если он проходит через вершину
RAY_SHIFT = 1e-12
# Допуск на |v| <= 1 для вершин, лежащих на единичной окружности
BALL_SLACK = 1e-12


@dataclass(frozen=True)
class Oval:
    """
    Замкнутая ломаная без самопересечений, вершины против часовой стрелки

    Последняя вершина неявно соединяется с первой.
    """

    id: int
    vertices: Tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(
            self, 'vertices', tuple((float(x), float(y)) for x, y in self.vertices)
        )

    def edges(self):
        """Рёбра (a, b) по кругу"""
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def signed_area(self) -> float:
        """Ориентированная площадь по формуле шнурования"""
        total = 0.0
        for (x1, y1), (x2, y2) in self.edges():
            total += x1 * y2 - x2 * y1
        return total / 2.0

    def area(self) -> float:
        return abs(self.signed_area())

    def bounding_box(self):
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)


@dataclass(frozen=True)
class OvalConfiguration:
    """Проверенная конфигурация: границы попарно не пересекаются"""

    ovals: Tuple[Oval, ...]

    @property
    def N(self) -> int:
        return len(self.ovals)

    def by_id(self, oval_id):
        for oval in self.ovals:
            if oval.id == oval_id:
                return oval
        raise KeyError(oval_id)


def _orientation(a: Point, b: Point, c: Point) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    """p коллинеарна ab и лежит в её ограничивающем прямоугольнике"""
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segments_intersect(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """Точная проверка пересечения отрезков, включая касание и наложение"""
    d1 = _orientation(q1, q2, p1)
    d2 = _orientation(q1, q2, p2)
    d3 = _orientation(p1, p2, q1)
    d4 = _orientation(p1, p2, q2)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        return True
    if d1 == 0 and _on_segment(q1, q2, p1):
        return True
    if d2 == 0 and _on_segment(q1, q2, p2):
        return True
    if d3 == 0 and _on_segment(p1, p2, q1):
        return True
    if d4 == 0 and _on_segment(p1, p2, q2):
        return True
    return False


def _edge_arrays(oval: Oval):
    """Начала и концы рёбер: два массива формы (n, 2)"""
    start = np.asarray(oval.vertices, dtype=float)
    return start, np.roll(start, -1, axis=0)


def _orient(a, b, c):
    return (b[..., 0] - a[..., 0]) * (c[..., 1] - a[..., 1]) - (b[..., 1] - a[..., 1]) * (c[..., 0] - a[..., 0])


def _within(a, b, p):
    return ((np.minimum(a[..., 0], b[..., 0]) <= p[..., 0]) & (p[..., 0] <= np.maximum(a[..., 0], b[..., 0]))
            & (np.minimum(a[..., 1], b[..., 1]) <= p[..., 1]) & (p[..., 1] <= np.maximum(a[..., 1], b[..., 1])))


def _intersection_matrix(p1, p2, q1, q2) -> np.ndarray:
    """
    Матрица (m, k): пересекается ли ребро i первой ломаной с ребром j второй

    Та же проверка, что в segments_intersect, сразу для всех пар рёбер.
    """
    p1, p2 = p1[:, None, :], p2[:, None, :]
    q1, q2 = q1[None, :, :], q2[None, :, :]
    d1 = _orient(q1, q2, p1)
    d2 = _orient(q1, q2, p2)
    d3 = _orient(p1, p2, q1)
    d4 = _orient(p1, p2, q2)
    proper = (((d1 > 0) & (d2 < 0)) | ((d1 < 0) & (d2 > 0))) & (((d3 > 0) & (d4 < 0)) | ((d3 < 0) & (d4 > 0)))
    touch = (((d1 == 0) & _within(q1, q2, p1)) | ((d2 == 0) & _within(q1, q2, p2))
             | ((d3 == 0) & _within(p1, p2, q1)) | ((d4 == 0) & _within(p1, p2, q2)))
    return proper | touch


def is_self_intersecting(oval: Oval) -> bool:
    """Пересекаются ли несмежные рёбра либо накладываются смежные"""
    start, end = _edge_arrays(oval)
    n = len(start)
    hits = _intersection_matrix(start, end, start, end)
    i, j = np.triu_indices(n, k=2)
    keep = ~((i == 0) & (j == n - 1))
    if np.any(hits[i[keep], j[keep]]):
        return True
    # Смежные рёбра имеют общую вершину; пересечение возможно только при развороте назад
    previous = np.roll(start, 1, axis=0)
    following = end
    collinear = _orient(previous, start, following) == 0
    backwards = np.einsum('ij,ij->i', previous - start, following - start) > 0
    return bool(np.any(collinear & backwards))


def boundaries_intersect(first: Oval, second: Oval) -> bool:
    """Пересекаются ли границы двух овалов (все пары рёбер разом)"""
    bx1 = first.bounding_box()
    bx2 = second.bounding_box()
    if bx1[2] < bx2[0] or bx2[2] < bx1[0] or bx1[3] < bx2[1] or bx2[3] < bx1[1]:
        return False
    return bool(np.any(_intersection_matrix(*_edge_arrays(first), *_edge_arrays(second))))


def point_in_polygon(point: Point, vertices: Sequence[Point]) -> bool:
    """
    Правило чётности пересечений с горизонтальным лучом вправо

    Если луч проходит через вершину, он детерминированно сдвигается на RAY_SHIFT по y.
    """
    px, py = float(point[0]), float(point[1])
    if any(vy == py for _, vy in vertices):
        py += RAY_SHIFT
    inside = False
    n = len(vertices)
    j = n - 1
    for i in range(n):
        xi, yi = vertices[i]
        xj, yj = vertices[j]
        if (yi > py) != (yj > py):
            cross_x = (xj - xi) * (py - yi) / (yj - yi) + xi
            if px < cross_x:
                inside = not inside
        j = i
    return inside


def points_in_polygon(points, vertices: Sequence[Point]) -> np.ndarray:
    """point_in_polygon для массива точек формы (m, 2); возвращает булев массив (m,)"""
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    ring = np.asarray(vertices, dtype=float)
    px = pts[:, 0][:, None]
    py = pts[:, 1].copy()
    py[np.isin(py, ring[:, 1])] += RAY_SHIFT
    py = py[:, None]
    xi, yi = ring[:, 0][None, :], ring[:, 1][None, :]
    xj, yj = np.roll(ring[:, 0], 1)[None, :], np.roll(ring[:, 1], 1)[None, :]
    straddles = (yi > py) != (yj > py)
    with np.errstate(divide='ignore', invalid='ignore'):
        cross_x = (xj - xi) * (py - yi) / (yj - yi) + xi
    crossings = np.sum(straddles & (px < cross_x), axis=1)
    return crossings % 2 == 1


def contains(a: Oval, b: Oval) -> bool:
    """
    Лежит ли овал b строго внутри овала a

    Для овалов из проверенной конфигурации границы не пересекаются, поэтому b целиком
    внутри a либо целиком снаружи: достаточно проверить одну вершину b.
    """
    if a.id == b.id:
        return False
    return point_in_polygon(b.vertices[0], a.vertices)


def inside_any(ovals, point) -> bool:
    """Лежит ли точка внутри хотя бы одного из овалов"""
    return any(point_in_polygon(point, oval.vertices) for oval in ovals)


def validate_oval(oval: Oval):
    """Проверить отдельный овал; бросает ValidationError"""
    if len(oval.vertices) < 3:
        raise ValidationError('TooFewVertices', id=oval.id)
    for x, y in oval.vertices:
        if x * x + y * y > 1.0 + BALL_SLACK:
            raise ValidationError('OutsideUnitBall', id=oval.id)
    if is_self_intersecting(oval):
        raise ValidationError('SelfIntersecting', id=oval.id)
    if oval.signed_area() <= 0:
        raise ValidationError('NonPositiveArea', id=oval.id)


def validate_configuration(ovals: List[Oval]) -> OvalConfiguration:
    """
    Проверить набор овалов и собрать конфигурацию

    Returns:
        OvalConfiguration, у которой границы попарно не пересекаются

    Raises:
        ValidationError: TooFewVertices, OutsideUnitBall, SelfIntersecting,
            NonPositiveArea, DuplicateId, BoundariesIntersect
    """
    OperationLog.log("geometry", 'config_validation_started', stage='validate', count=len(ovals))
    seen = set()
    for oval in ovals:
        if oval.id in seen:
            raise ValidationError('DuplicateId', id=oval.id)
        seen.add(oval.id)
        validate_oval(oval)

    for i, first in enumerate(ovals):
        for second in ovals[i + 1:]:
            if boundaries_intersect(first, second):
                raise ValidationError('BoundariesIntersect', id1=first.id, id2=second.id)

    OperationLog.log("geometry", 'config_validated', stage='validate', count=len(ovals))
    return OvalConfiguration(tuple(ovals))
