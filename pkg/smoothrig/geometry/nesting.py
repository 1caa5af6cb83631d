"""Лес вложенности овалов и набор областей W_j"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from smoothrig.errors import ValidationError
from smoothrig.geometry.ovals import (
    Oval, OvalConfiguration, contains, point_in_polygon, points_in_polygon,
)
from smoothrig.logger import OperationLog

FORMULA_AREA = "domain_area: area(outer) - sum area(children)"
FORMULA_MU = "mu: min over domains W_j of area(W_j)"


@dataclass
class ForestNode:
    """Узел леса: родитель (наименьший содержащий овал), дети и глубина"""

    oval: Oval
    parent: Optional[int] = None
    children: List[int] = field(default_factory=list)
    depth: int = 1


@dataclass
class NestingForest:
    """Иерархия вложенности: по узлу на овал"""

    config: OvalConfiguration
    nodes: Dict[int, ForestNode]

    @property
    def roots(self) -> List[int]:
        return [oid for oid, node in self.nodes.items() if node.parent is None]

    @property
    def max_depth(self) -> int:
        return max((node.depth for node in self.nodes.values()), default=0)

    def to_dict(self):
        return {
            str(oid): {
                'parent': node.parent,
                'children': list(node.children),
                'depth': node.depth,
            }
            for oid, node in sorted(self.nodes.items())
        }


@dataclass(frozen=True)
class Domain:
    """Область, ограниченная снаружи овалом outer и изнутри его прямыми потомками"""

    outer: Oval
    holes: Tuple[Oval, ...]
    area: float

    @property
    def id(self):
        return self.outer.id

    def contains_point(self, point) -> bool:
        """Внутри outer и вне всех дыр"""
        if not point_in_polygon(point, self.outer.vertices):
            return False
        return not any(point_in_polygon(point, hole.vertices) for hole in self.holes)

    def contains_points(self, points) -> np.ndarray:
        """contains_point для массива точек формы (m, 2)"""
        mask = points_in_polygon(points, self.outer.vertices)
        for hole in self.holes:
            mask &= ~points_in_polygon(points, hole.vertices)
        return mask

    def to_dict(self):
        return {
            'outer': self.outer.id,
            'holes': [hole.id for hole in self.holes],
            'area': self.area,
        }


def build_nesting_forest(config: OvalConfiguration) -> NestingForest:
    """
    Построить лес вложенности

    Глубина овала = 1 + число содержащих его овалов; родитель = содержащий овал
    наибольшей глубины. Квадратичный перебор пар без рекурсии.
    """
    containers: Dict[int, List[int]] = {oval.id: [] for oval in config.ovals}
    for outer in config.ovals:
        for inner in config.ovals:
            if outer.id != inner.id and contains(outer, inner):
                containers[inner.id].append(outer.id)

    nodes = {
        oval.id: ForestNode(oval=oval, depth=len(containers[oval.id]) + 1)
        for oval in config.ovals
    }
    for oval in config.ovals:
        holders = containers[oval.id]
        if holders:
            parent = max(holders, key=lambda oid: nodes[oid].depth)
            nodes[oval.id].parent = parent
            nodes[parent].children.append(oval.id)
    for node in nodes.values():
        node.children.sort()

    forest = NestingForest(config=config, nodes=nodes)
    OperationLog.log("geometry", 'forest_built', stage='forest',
                     roots=len(forest.roots), depth=forest.max_depth)
    return forest


def domain_area(domain: Domain) -> float:
    """Площадь outer минус сумма площадей дыр; строго положительна"""
    area = domain.outer.area() - sum(hole.area() for hole in domain.holes)
    if area <= 0:
        raise ValidationError('NonPositiveArea', id=domain.outer.id)
    return area


def make_domain(outer: Oval, holes) -> Domain:
    """Собрать область и посчитать её площадь"""
    draft = Domain(outer=outer, holes=tuple(holes), area=0.0)
    return Domain(outer=outer, holes=draft.holes, area=domain_area(draft))


def build_domains(forest: NestingForest) -> List[Domain]:
    """
    Набор областей U(Z): ровно одна область на овал

    Raises:
        ValidationError: NonPositiveArea при численно вырожденном входе
    """
    domains = []
    for oid in sorted(forest.nodes):
        node = forest.nodes[oid]
        holes = [forest.nodes[child].oval for child in node.children]
        domains.append(make_domain(node.oval, holes))
    OperationLog.log("geometry", 'domains_built', stage='domains',
                     count=len(domains), mu=min((d.area for d in domains), default=0.0))
    return domains


def mu(domains: List[Domain]) -> float:
    """mu(Z): минимальная площадь области"""
    if not domains:
        raise ValidationError('EmptyConfiguration')
    return min(domain.area for domain in domains)


def locate_domain(domains: List[Domain], point) -> Optional[int]:
    """Идентификатор области, содержащей точку, или None (точка вне всех овалов)"""
    for domain in domains:
        if domain.contains_point(point):
            return domain.id
    return None
