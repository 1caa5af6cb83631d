"""Отчёты запусков: манифест, провенанс чисел и детерминированный JSON"""
import hashlib
import json
import math
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import Dict, Optional

import numpy as np

from smoothrig import __version__


def file_digest(file_path: Path) -> str:
    """sha256 содержимого файла"""
    digest = hashlib.sha256()
    with open(file_path, 'rb') as f:
        for chunk in iter(lambda: f.read(65536), b''):
            digest.update(chunk)
    return digest.hexdigest()


@dataclass
class RunManifest:
    """Параметры запуска; встраивается в каждый отчёт"""

    subcommand: str
    params: Dict = field(default_factory=dict)
    inputs: Dict[str, str] = field(default_factory=dict)
    version: str = __version__
    timestamp: Optional[str] = None

    def add_input(self, name: str, file_path):
        if file_path is not None and Path(file_path).is_file():
            self.inputs[name] = file_digest(Path(file_path))

    def to_dict(self):
        return {
            'subcommand': self.subcommand,
            'params': self.params,
            'inputs': dict(sorted(self.inputs.items())),
            'version': self.version,
            'timestamp': self.timestamp or datetime.now(timezone.utc).isoformat(),
        }


def quantity(value, formula: str, **extra) -> Dict:
    """Число вместе со строкой формулы, которую оно воплощает"""
    out = {'value': value, 'formula': formula}
    out.update(extra)
    return out


def to_jsonable(value):
    """
    Привести результат к JSON: numpy-типы к обычным, бесконечность к строке "inf",
    NaN к null, Fraction к строке "p/q"
    """
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return None
        if math.isinf(value):
            return 'inf' if value > 0 else '-inf'
        return value
    if isinstance(value, Path):
        return str(value)
    if hasattr(value, 'to_dict'):
        return to_jsonable(value.to_dict())
    return value


def render_report(manifest: RunManifest, body: Dict) -> str:
    """JSON с отсортированными ключами: одинаковые входы дают одинаковое тело"""
    document = {'manifest': manifest.to_dict(), 'report': body}
    return json.dumps(to_jsonable(document), sort_keys=True, indent=2, ensure_ascii=False)


def emit_report(manifest: RunManifest, body: Dict, out: Optional[Path] = None) -> str:
    """Записать отчёт в файл out или вернуть текст для вывода в stdout"""
    text = render_report(manifest, body)
    if out is not None:
        Path(out).write_text(text + '\n', encoding='utf-8')
    return text
