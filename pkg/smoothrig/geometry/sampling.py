"""Дискретизация: точки на границах овалов, сетки шара и решётки внутри областей"""
import numpy as np

from smoothrig.errors import ValidationError
from smoothrig.geometry.nesting import Domain
from smoothrig.geometry.ovals import Oval, OvalConfiguration


def sample_boundary(oval: Oval, count: int) -> np.ndarray:
    """
    count точек на границе овала, равномерно по длине дуги

    Returns:
        Массив формы (count, 2)
    """
    if count < 1:
        raise ValidationError('InvalidRange', name='samples-per-oval', value=count)
    ring = np.asarray(oval.vertices + (oval.vertices[0],), dtype=float)
    lengths = np.hypot(np.diff(ring[:, 0]), np.diff(ring[:, 1]))
    cumulative = np.concatenate([[0.0], np.cumsum(lengths)])
    targets = np.linspace(0.0, cumulative[-1], count, endpoint=False)
    xs = np.interp(targets, cumulative, ring[:, 0])
    ys = np.interp(targets, cumulative, ring[:, 1])
    return np.column_stack([xs, ys])


def boundary_samples(config: OvalConfiguration, count: int) -> np.ndarray:
    """Точки Z: объединение выборок по всем овалам конфигурации"""
    return np.vstack([sample_boundary(oval, count) for oval in config.ovals])


def ball_grid(n: int, steps: int) -> np.ndarray:
    """
    Кандидаты для sup по шару B^n

    При n = 1 это steps равномерных точек отрезка [-1, 1]; при n >= 2 равномерная
    сетка с шагом 2/steps, пересечённая с единичным шаром.
    """
    if steps < 1 or n < 1:
        raise ValidationError('InvalidRange', name='grid', value=steps)
    if n == 1:
        return np.linspace(-1.0, 1.0, steps)[:, None]
    axis = -1.0 + 2.0 * np.arange(steps + 1) / steps
    mesh = np.stack(np.meshgrid(*([axis] * n), indexing='ij'), axis=-1).reshape(-1, n)
    return mesh[np.einsum('ij,ij->i', mesh, mesh) <= 1.0 + 1e-12]


def box_lattice(bounds, samples: int) -> np.ndarray:
    """
    Решётка (samples+1)^2 точек в прямоугольнике bounds = (xmin, ymin, xmax, ymax)

    Шаг span/samples: при удвоении samples старая решётка входит в новую.
    """
    xmin, ymin, xmax, ymax = bounds
    index = np.arange(samples + 1)
    xs = xmin + index * ((xmax - xmin) / samples)
    ys = ymin + index * ((ymax - ymin) / samples)
    return np.stack(np.meshgrid(xs, ys, indexing='ij'), axis=-1).reshape(-1, 2)


def domain_lattice(domain: Domain, samples: int) -> np.ndarray:
    """Точки решётки ограничивающего прямоугольника outer, попавшие в область"""
    lattice = box_lattice(domain.outer.bounding_box(), samples)
    return lattice[domain.contains_points(lattice)]
