"""Тесты геометрии: проверка овалов, лес вложенности, области W_j, дискретизация"""
import math

import numpy as np
import pytest

from conftest import annulus_ovals, chain_ovals
from smoothrig.errors import ValidationError
from smoothrig.geometry import (
    Oval, ball_grid, box_lattice, build_domains, build_nesting_forest, circle_oval, contains,
    domain_lattice, inside_any, locate_domain, make_domain, mu, point_in_polygon, points_in_polygon,
    random_circle_configuration, sample_boundary, segments_intersect, square_oval,
    validate_configuration,
)


def _decompose(ovals):
    config = validate_configuration(ovals)
    forest = build_nesting_forest(config)
    return config, forest, build_domains(forest)


def test_annulus_domains_and_mu():
    """Кольцо и внутренний квадрат: две области, mu равно площади внутреннего квадрата"""
    config, forest, domains = _decompose(annulus_ovals())
    assert config.N == 2
    assert forest.nodes[2].parent == 1
    assert forest.nodes[1].children == [2]
    areas = {domain.id: domain.area for domain in domains}
    assert areas[1] == pytest.approx(1.47)
    assert areas[2] == pytest.approx(0.49)
    assert mu(domains) == pytest.approx(0.49)


def test_chain_depths():
    _, forest, domains = _decompose(chain_ovals())
    assert [forest.nodes[i].depth for i in (1, 2, 3)] == [1, 2, 3]
    assert forest.max_depth == 3
    assert forest.roots == [1]
    assert [d.holes[0].id for d in domains if d.holes] == [2, 3]


def test_disjoint_siblings_are_roots():
    ovals = [circle_oval(1, (-0.5, 0.0), 0.3), circle_oval(2, (0.5, 0.0), 0.3)]
    _, forest, domains = _decompose(ovals)
    assert sorted(forest.roots) == [1, 2]
    assert all(not domain.holes for domain in domains)


def test_single_oval():
    _, _, domains = _decompose([square_oval(7, (0.0, 0.0), 1.0)])
    assert len(domains) == 1
    assert mu(domains) == pytest.approx(1.0)


def test_validation_errors():
    bow_tie = Oval(1, ((0.0, 0.0), (0.5, 0.5), (0.5, 0.0), (0.0, 0.5)))
    with pytest.raises(ValidationError) as e:
        validate_configuration([bow_tie])
    assert e.value.kind == 'SelfIntersecting'

    with pytest.raises(ValidationError) as e:
        validate_configuration([Oval(1, ((0.0, 0.0), (0.1, 0.0)))])
    assert e.value.kind == 'TooFewVertices'

    with pytest.raises(ValidationError) as e:
        validate_configuration([square_oval(1, (0.0, 0.0), 2.0)])
    assert e.value.kind == 'OutsideUnitBall'

    with pytest.raises(ValidationError) as e:
        validate_configuration([circle_oval(1, (0.0, 0.0), 0.5), circle_oval(2, (0.3, 0.0), 0.5)])
    assert e.value.kind == 'BoundariesIntersect'

    with pytest.raises(ValidationError) as e:
        validate_configuration([circle_oval(1, (-0.5, 0.0), 0.2), circle_oval(1, (0.5, 0.0), 0.2)])
    assert e.value.kind == 'DuplicateId'

    clockwise = Oval(1, tuple(reversed(square_oval(1, (0.0, 0.0), 0.5).vertices)))
    with pytest.raises(ValidationError) as e:
        validate_configuration([clockwise])
    assert e.value.kind == 'NonPositiveArea'


def test_hole_touching_outer_boundary_is_rejected():
    outer = square_oval(1, (0.0, 0.0), 1.0)
    inner = Oval(2, ((0.0, -0.5), (0.2, 0.0), (-0.2, 0.0)))
    with pytest.raises(ValidationError) as e:
        validate_configuration([outer, inner])
    assert e.value.kind == 'BoundariesIntersect'


def test_empty_configuration_mu():
    with pytest.raises(ValidationError) as e:
        mu([])
    assert e.value.kind == 'EmptyConfiguration'


def test_make_domain_nonpositive_area():
    outer = square_oval(1, (0.0, 0.0), 0.5)
    holes = [square_oval(2, (0.0, 0.0), 0.5)]
    with pytest.raises(ValidationError) as e:
        make_domain(outer, holes)
    assert e.value.kind == 'NonPositiveArea'


def test_segments_intersect_cases():
    assert segments_intersect((0, 0), (1, 1), (0, 1), (1, 0))
    assert segments_intersect((0, 0), (1, 0), (1, 0), (2, 0))
    assert not segments_intersect((0, 0), (1, 0), (0, 1), (1, 1))


def test_point_in_polygon_ray_through_vertex():
    """Луч через вершину сдвигается, ответ не меняется"""
    diamond = ((0.0, -0.5), (0.5, 0.0), (0.0, 0.5), (-0.5, 0.0))
    assert point_in_polygon((0.0, 0.0), diamond)
    assert not point_in_polygon((-0.75, 0.0), diamond)
    assert point_in_polygon((-0.25, 0.0), diamond)


def test_points_in_polygon_matches_scalar(rng):
    oval = circle_oval(1, (0.1, -0.2), 0.6, vertices=17)
    points = rng.uniform(-1.0, 1.0, size=(400, 2))
    batch = points_in_polygon(points, oval.vertices)
    single = [point_in_polygon(p, oval.vertices) for p in points]
    assert batch.tolist() == single


def test_locate_domain():
    _, _, domains = _decompose(annulus_ovals())
    assert locate_domain(domains, (0.0, 0.0)) == 2
    assert locate_domain(domains, (0.6, 0.0)) == 1
    assert locate_domain(domains, (0.95, 0.0)) is None


def test_sample_boundary_on_polygon():
    oval = square_oval(1, (0.0, 0.0), 1.0)
    samples = sample_boundary(oval, 40)
    assert samples.shape == (40, 2)
    on_edge = np.isclose(np.max(np.abs(samples), axis=1), 0.5)
    assert on_edge.all()


def test_ball_grid():
    line = ball_grid(1, 1024)
    assert line.shape == (1024, 1)
    assert line[0, 0] == -1.0 and line[-1, 0] == 1.0
    disk = ball_grid(2, 64)
    assert np.all(np.einsum('ij,ij->i', disk, disk) <= 1.0 + 1e-12)
    assert any(np.allclose(p, (0.0, 0.0)) for p in disk)


def test_lattices_are_nested():
    """Удвоение числа шагов сохраняет все старые точки решётки"""
    bounds = (-0.7, -0.7, 0.7, 0.7)
    coarse = {tuple(np.round(p, 12)) for p in box_lattice(bounds, 8)}
    fine = {tuple(np.round(p, 12)) for p in box_lattice(bounds, 16)}
    assert coarse <= fine

    _, _, domains = _decompose(annulus_ovals())
    ring = domains[0]
    points = domain_lattice(ring, 16)
    assert len(points) > 0
    assert all(ring.contains_point(p) for p in points)


def test_random_configurations_domain_identity():
    """200 случайных конфигураций: областей столько же, сколько овалов, площади сходятся"""
    rng = np.random.default_rng(7)
    checked = 0
    for _ in range(200):
        count = int(rng.integers(1, 21))
        ovals = random_circle_configuration(rng, count, max_depth=4, vertices=32)
        if not ovals:
            continue
        config, forest, domains = _decompose(ovals)
        assert len(domains) == config.N
        assert forest.max_depth <= 4
        root_area = sum(forest.nodes[oid].oval.area() for oid in forest.roots)
        total = math.fsum(domain.area for domain in domains)
        assert total == pytest.approx(root_area, rel=1e-9)
        checked += 1
    assert checked > 150


def test_contains_examples():
    big = square_oval(1, (0.0, 0.0), 1.0)
    small = square_oval(2, (0.0, 0.0), 0.5)
    assert contains(big, small)
    assert not contains(small, big)
    left = square_oval(3, (-0.4, 0.0), 0.3)
    right = square_oval(4, (0.4, 0.0), 0.3)
    assert not contains(left, right)
    assert not contains(right, left)
    assert not contains(big, big)


def test_contains_is_strict_partial_order(rng):
    checked = 0
    for _ in range(20):
        ovals = random_circle_configuration(rng, 10, vertices=32)
        if not ovals:
            continue
        ovals = validate_configuration(ovals).ovals
        for a in ovals:
            assert not contains(a, a)
            for b in ovals:
                if contains(a, b):
                    assert not contains(b, a)
                    for c in ovals:
                        if contains(b, c):
                            assert contains(a, c)
        checked += 1
    assert checked > 0


@pytest.mark.parametrize('center, radius, host', [
    ((0.0, 0.0), 0.2, 2),
    ((0.52, 0.0), 0.1, 1),
])
def test_adding_oval_splits_one_domain(center, radius, host):
    """Новый овал внутри области: площадь хозяина уменьшается ровно на площадь овала"""
    _, _, before = _decompose(annulus_ovals())
    extra = circle_oval(3, center, radius)
    _, forest, after = _decompose(annulus_ovals() + [extra])
    assert len(after) == len(before) + 1
    assert forest.nodes[3].parent == host
    old = {domain.id: domain.area for domain in before}
    new = {domain.id: domain.area for domain in after}
    assert new[host] == pytest.approx(old[host] - extra.area(), rel=1e-12)
    for oid in old:
        if oid != host:
            assert new[oid] == pytest.approx(old[oid], rel=1e-12)
    assert new[3] == pytest.approx(extra.area(), rel=1e-12)


def test_forest_with_two_children_and_grandchild():
    ovals = [
        circle_oval(1, (0.0, 0.0), 0.9),
        circle_oval(2, (-0.4, 0.0), 0.35),
        circle_oval(3, (0.4, 0.0), 0.35),
        circle_oval(4, (0.4, 0.0), 0.15),
    ]
    _, forest, domains = _decompose(ovals)
    assert sorted(node.depth for node in forest.nodes.values()) == [1, 2, 2, 3]
    assert forest.nodes[4].parent == 3
    assert sorted(forest.nodes[1].children) == [2, 3]
    assert len(domains) == 4


def test_regular_64gon_area():
    area = circle_oval(1, (0.0, 0.0), 1.0).area()
    assert area == pytest.approx(32.0 * math.sin(2.0 * math.pi / 64), rel=1e-12)
    # 32 sin(pi/32) = 3.13655
    assert area == pytest.approx(3.13655, abs=1e-4)


def test_inside_any():
    ovals = annulus_ovals()
    assert inside_any(ovals, (0.0, 0.0))
    assert inside_any(ovals, (0.5, 0.0))
    assert not inside_any(ovals, (0.9, 0.0))
    assert not inside_any([], (0.0, 0.0))
