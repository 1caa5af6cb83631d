"""Парсер файла конфигурации овалов"""
import json
from pathlib import Path
from typing import Dict, List

from smoothrig.errors import ValidationError
from smoothrig.geometry import Oval, OvalConfiguration


def _load_json(file_path: Path):
    if not file_path.exists():
        raise ValidationError('MalformedInput', path=file_path, field='<file>')
    try:
        with open(file_path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except json.JSONDecodeError:
        raise ValidationError('MalformedInput', path=file_path, field='<json>')


def parse_ovals(data, source='<config>') -> List[Oval]:
    """
    Разобрать {"ovals": [{"id": 1, "vertices": [[x, y], ...]}, ...]}

    Raises:
        ValidationError: MalformedInput с именем поля, которое не удалось прочитать
    """
    if not isinstance(data, dict) or not isinstance(data.get('ovals'), list):
        raise ValidationError('MalformedInput', path=source, field='ovals')

    ovals = []
    for index, item in enumerate(data['ovals']):
        where = f"ovals[{index}]"
        if not isinstance(item, dict):
            raise ValidationError('MalformedInput', path=source, field=where)
        oid = item.get('id')
        if isinstance(oid, bool) or not isinstance(oid, int):
            raise ValidationError('MalformedInput', path=source, field=f"{where}.id")
        vertices = item.get('vertices')
        if not isinstance(vertices, list):
            raise ValidationError('MalformedInput', path=source, field=f"{where}.vertices")
        points = []
        for k, vertex in enumerate(vertices):
            try:
                x, y = vertex
                points.append((float(x), float(y)))
            except (TypeError, ValueError):
                raise ValidationError('MalformedInput', path=source,
                                      field=f"{where}.vertices[{k}]")
        ovals.append(Oval(id=oid, vertices=tuple(points)))
    return ovals


def parse_config_file(file_path: Path) -> List[Oval]:
    """Прочитать овалы из JSON-файла (без проверки конфигурации)"""
    file_path = Path(file_path)
    return parse_ovals(_load_json(file_path), source=file_path)


def config_to_dict(config: OvalConfiguration) -> Dict:
    """Обратное преобразование: конфигурация в JSON-совместимый словарь"""
    return {
        'ovals': [
            {'id': oval.id, 'vertices': [list(v) for v in oval.vertices]}
            for oval in config.ovals
        ]
    }
