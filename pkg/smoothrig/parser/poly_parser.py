"""Парсер многочленов: {"nvars": 2, "terms": [{"exp": [i, j], "coef": c}, ...]}"""
import json
from pathlib import Path
from typing import Dict

from smoothrig.errors import ValidationError
from smoothrig.poly import MultiPoly


def poly_from_dict(data, source='<poly>') -> MultiPoly:
    if not isinstance(data, dict):
        raise ValidationError('MalformedInput', path=source, field='<root>')
    nvars = data.get('nvars')
    if isinstance(nvars, bool) or not isinstance(nvars, int) or nvars < 1:
        raise ValidationError('MalformedInput', path=source, field='nvars')
    terms = data.get('terms')
    if not isinstance(terms, list):
        raise ValidationError('MalformedInput', path=source, field='terms')

    collected = {}
    for index, term in enumerate(terms):
        try:
            exp = tuple(int(e) for e in term['exp'])
            coef = float(term['coef'])
        except (KeyError, TypeError, ValueError):
            raise ValidationError('MalformedInput', path=source, field=f"terms[{index}]")
        if len(exp) != nvars or any(e < 0 for e in exp):
            raise ValidationError('MalformedInput', path=source, field=f"terms[{index}].exp")
        collected[exp] = collected.get(exp, 0.0) + coef
    return MultiPoly(nvars, collected)


def poly_to_dict(p: MultiPoly) -> Dict:
    """Словарь с термами в лексикографическом порядке показателей"""
    return {
        'nvars': p.nvars,
        'terms': [{'exp': list(exp), 'coef': coef} for exp, coef in sorted(p.terms.items())],
    }


def parse_poly_file(file_path: Path) -> MultiPoly:
    file_path = Path(file_path)
    if not file_path.exists():
        raise ValidationError('MalformedInput', path=file_path, field='<file>')
    try:
        with open(file_path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except json.JSONDecodeError:
        raise ValidationError('MalformedInput', path=file_path, field='<json>')
    return poly_from_dict(data, source=file_path)
