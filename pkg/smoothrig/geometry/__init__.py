"""Модуль геометрии: овалы, вложенность, области W_j"""
from smoothrig.geometry.ovals import (
    Oval, OvalConfiguration, validate_configuration, contains, inside_any, point_in_polygon,
    points_in_polygon, segments_intersect,
)
from smoothrig.geometry.nesting import (
    NestingForest, Domain, build_nesting_forest, build_domains, domain_area, mu,
    make_domain, locate_domain, FORMULA_AREA, FORMULA_MU,
)
from smoothrig.geometry.sampling import (
    sample_boundary, boundary_samples, ball_grid, box_lattice, domain_lattice,
)
from smoothrig.geometry.generators import circle_oval, square_oval, random_circle_configuration

__all__ = [
    'Oval', 'OvalConfiguration', 'validate_configuration', 'contains', 'inside_any', 'point_in_polygon', 'points_in_polygon',
    'segments_intersect', 'NestingForest', 'Domain', 'build_nesting_forest', 'build_domains',
    'domain_area', 'mu', 'make_domain', 'locate_domain', 'FORMULA_AREA', 'FORMULA_MU', 'sample_boundary',
    'boundary_samples', 'ball_grid', 'box_lattice', 'domain_lattice', 'circle_oval',
    'square_oval', 'random_circle_configuration',
]
