"""Парсер списков точек: CSV (x или x,y на строку) либо JSON-массив"""
import json
from pathlib import Path

import numpy as np

from smoothrig.errors import ValidationError


def parse_points_file(file_path: Path) -> np.ndarray:
    """
    Прочитать точки в массив формы (k, n)

    Строки CSV, начинающиеся с '#', пропускаются. JSON: список чисел (n = 1)
    или список координатных списков.
    """
    file_path = Path(file_path)
    if not file_path.exists():
        raise ValidationError('MalformedInput', path=file_path, field='<file>')

    if file_path.suffix.lower() == '.json':
        try:
            with open(file_path, 'r', encoding='utf-8') as f:
                data = json.load(f)
            if isinstance(data, dict):
                data = data['points']
            points = np.asarray(data, dtype=float)
        except (json.JSONDecodeError, KeyError, TypeError, ValueError):
            raise ValidationError('MalformedInput', path=file_path, field='points')
    else:
        try:
            points = np.loadtxt(file_path, delimiter=',', comments='#', ndmin=2)
        except ValueError:
            raise ValidationError('MalformedInput', path=file_path, field='<csv>')

    if points.ndim == 1:
        points = points[:, None]
    if points.ndim != 2 or points.shape[0] == 0:
        raise ValidationError('MalformedInput', path=file_path, field='points')
    if not np.all(np.isfinite(points)):
        raise ValidationError('MalformedInput', path=file_path, field='points')
    return points
