"""Сводный отчёт о нижних оценках жёсткости"""
from dataclasses import dataclass, field
from typing import List, Optional

from smoothrig.errors import ValidationError
from smoothrig.remez import (
    FORMULA_HARNACK, RemezEstimate, harnack_max_ovals, inverse_remez, required_ovals,
)
from smoothrig.rigidity.bounds import (
    FORMULA_FROM_REMEZ, FORMULA_TOPOLOGICAL_COMPOSED, FORMULA_TOPOLOGICAL_LITERAL,
    rigidity_from_remez, rigidity_topological_composed, rigidity_topological_literal,
)
from smoothrig.rigidity.divided import (
    FORMULA_ONE_DIMENSIONAL, FORMULA_POINT_COUNT, rigidity_1d_bound, rigidity_point_count,
)

FORMULA_IDS = (
    'from_remez', 'topological_literal', 'topological_composed', 'one_dimensional', 'interior_line',
)

SATISFIED = 'satisfied'


@dataclass
class BoundEntry:
    """Одна оценка: идентификатор формулы, значение и статус гипотезы"""

    formula_id: str
    value: float
    formula: str
    hypothesis: str = SATISFIED
    label: Optional[str] = None

    def to_dict(self):
        out = {
            'id': self.formula_id,
            'value': self.value,
            'formula': self.formula,
            'hypothesis': self.hypothesis,
        }
        if self.label:
            out['label'] = self.label
        return out


@dataclass
class RigidityReport:
    """Оценки жёсткости порядка d; в bounds только оценки с выполненной гипотезой"""

    d: int
    bounds: List[BoundEntry] = field(default_factory=list)
    skipped: List[dict] = field(default_factory=list)
    notes: List[dict] = field(default_factory=list)

    def add(self, entry: BoundEntry):
        if entry.formula_id not in FORMULA_IDS:
            raise ValueError(f"Неизвестная формула: {entry.formula_id}")
        if entry.hypothesis != SATISFIED:
            raise ValueError(f"Гипотеза оценки {entry.formula_id} не выполнена")
        self.bounds.append(entry)

    def skip(self, formula_id: str, reason: str):
        self.skipped.append({'id': formula_id, 'reason': reason})

    def value_of(self, formula_id: str) -> Optional[float]:
        for entry in self.bounds:
            if entry.formula_id == formula_id:
                return entry.value
        return None

    def to_dict(self):
        return {
            'd': self.d,
            'bounds': [entry.to_dict() for entry in self.bounds],
            'skipped': list(self.skipped),
            'notes': list(self.notes),
        }


def build_config_report(mu_value: float, oval_count: int, d: int, n: int = 2,
                        estimate: Optional[RemezEstimate] = None) -> RigidityReport:
    """
    Отчёт для конфигурации овалов

    Буквальная и составная топологические оценки приводятся вместе, когда
    овалов не меньше (d-1)^n + 1; иначе обе попадают в skipped с причиной.
    """
    report = RigidityReport(d=d)
    required = required_ovals(d, n)
    if oval_count >= required:
        report.add(BoundEntry('topological_literal', rigidity_topological_literal(mu_value, d, n),
                              FORMULA_TOPOLOGICAL_LITERAL, label='literal'))
        report.add(BoundEntry('topological_composed', rigidity_topological_composed(mu_value, d, n),
                              FORMULA_TOPOLOGICAL_COMPOSED, label='composed'))
    else:
        reason = f"овалов {oval_count}, требуется не меньше {required}"
        report.skip('topological_literal', reason)
        report.skip('topological_composed', reason)

    if estimate is not None:
        report.add(BoundEntry('from_remez', rigidity_from_remez(inverse_remez(estimate), d),
                              FORMULA_FROM_REMEZ))

    if n == 2 and d >= 1:
        limit = harnack_max_ovals(d)
        report.notes.append({
            'id': 'harnack',
            'formula': FORMULA_HARNACK,
            'max_ovals': limit,
            'exceeded': oval_count > limit,
        })
    return report


def build_1d_report(zeros, z0: float, fz0: float, d: int) -> RigidityReport:
    """Отчёт для набора нулей на отрезке [-1, 1] и точки z0 со значением fz0"""
    report = RigidityReport(d=d)
    report.add(BoundEntry('one_dimensional', rigidity_point_count(zeros, d),
                          FORMULA_POINT_COUNT, label='point_count'))
    try:
        value = rigidity_1d_bound(zeros, z0, fz0, d)
    except ValidationError as e:
        report.skip('one_dimensional', str(e))
    else:
        report.add(BoundEntry('one_dimensional', value, FORMULA_ONE_DIMENSIONAL,
                              label='divided_difference'))
    return report
