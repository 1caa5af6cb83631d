"""Проверка принципа Дирихле по областям W_j: внутренний максимум против граничного"""
from typing import List, Optional

import numpy as np

from smoothrig.config import CRITICAL_GRID, SAMPLES_PER_OVAL
from smoothrig.geometry import (
    Domain, OvalConfiguration, contains, domain_lattice, inside_any, sample_boundary,
)
from smoothrig.logger import OperationLog
from smoothrig.poly import MultiPoly
from smoothrig.prooftrace.critical import (
    UNIT_BOX, CriticalPointSet, default_direction, default_eps, find_critical_points,
    perturb_linear,
)


def _domain_boundary_max(p: MultiPoly, domain: Domain, count: int) -> float:
    ovals = (domain.outer,) + domain.holes
    ring = np.vstack([sample_boundary(oval, count) for oval in ovals]
                     + [np.asarray(oval.vertices, dtype=float) for oval in ovals])
    return float(np.max(np.abs(p.values(ring))))


def domain_pigeonhole_report(p: MultiPoly, config: OvalConfiguration, domains: List[Domain],
                             samples: int, boundary_samples: int = SAMPLES_PER_OVAL,
                             grid: int = CRITICAL_GRID, eps: Optional[float] = None,
                             critical: Optional[CriticalPointSet] = None) -> dict:
    """
    Для каждой области: max |p| на границе, max |p| на внутренней решётке, флаг
    "внутри больше" и наличие критической точки возмущённого p

    Граница выбирается фиксированным числом точек на овал, внутренность - решёткой
    с шагом span/samples, поэтому при удвоении samples флаги не сбрасываются.
    Проверка запертости: каждая найденная критическая точка внутри объединения
    корневых овалов со значением выше граничного максимума принадлежит ровно одной
    области.
    """
    if critical is None:
        eps = default_eps(p) if eps is None else eps
        perturbed = perturb_linear(p, default_direction(), eps)
        critical = find_critical_points(perturbed, UNIT_BOX, grid)
    critical.assign_domains(domains)

    roots = [oval for oval in config.ovals if not any(
        other.id != oval.id and contains(other, oval) for other in config.ovals)]
    zset_max = max((_domain_boundary_max(p, domain, boundary_samples) for domain in domains),
                   default=0.0)

    entries = []
    for domain in domains:
        boundary_max = _domain_boundary_max(p, domain, boundary_samples)
        lattice = domain_lattice(domain, samples)
        interior_max = float(np.max(np.abs(p.values(lattice)))) if len(lattice) else 0.0
        located = [point for point in critical.points if point.domain == domain.id]
        entries.append({
            'domain': domain.id,
            'boundary_max': boundary_max,
            'interior_max': interior_max,
            'lattice_points': int(len(lattice)),
            'interior_exceeds_boundary': interior_max > boundary_max,
            'critical_points': len(located),
            'has_critical_point': bool(located),
        })

    violations = []
    for point in critical.points:
        xy = (point.x, point.y)
        if abs(p(point.x, point.y)) <= zset_max or not inside_any(roots, xy):
            continue
        owners = sum(1 for domain in domains if domain.contains_point(xy))
        if owners != 1:
            violations.append({'point': [point.x, point.y], 'owners': owners})

    flagged = [entry for entry in entries if entry['interior_exceeds_boundary']]
    OperationLog.log("prooftrace", 'pigeonhole_finished', stage='pigeonhole',
                     flagged=len(flagged), domains=len(entries), violations=len(violations))
    return {
        'samples': samples,
        'boundary_samples': boundary_samples,
        'zset_boundary_max': zset_max,
        'domains': entries,
        'flagged': [entry['domain'] for entry in flagged],
        'flagged_without_critical_point': [
            entry['domain'] for entry in flagged if not entry['has_critical_point']
        ],
        'confinement': {
            'checked': True,
            'violations': violations,
            'holds': not violations,
        },
        'critical': critical.to_dict(),
    }
