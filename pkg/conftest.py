"""Общие фикстуры тестов"""
import json

import numpy as np
import pytest

from smoothrig.geometry import circle_oval, square_oval


def annulus_ovals():
    """Квадрат со стороной 1.4 и вложенный квадрат со стороной 0.7: площади областей 1.47 и 0.49"""
    return [square_oval(1, (0.0, 0.0), 1.4), square_oval(2, (0.0, 0.0), 0.7)]


def chain_ovals():
    """Три концентрические окружности: глубины 1, 2, 3"""
    return [circle_oval(1, (0.0, 0.0), 0.9), circle_oval(2, (0.0, 0.0), 0.6),
            circle_oval(3, (0.0, 0.0), 0.3)]


def pigeonhole_ovals():
    """Окружность радиуса 0.8 и несоосная окружность радиуса 0.3 внутри неё"""
    return [circle_oval(1, (0.0, 0.0), 0.8), circle_oval(2, (0.3, 0.0), 0.3)]


def ovals_to_json(ovals):
    return {'ovals': [{'id': o.id, 'vertices': [list(v) for v in o.vertices]} for o in ovals]}


def write_json(path, data):
    path.write_text(json.dumps(data), encoding='utf-8')
    return path


@pytest.fixture
def annulus_file(tmp_path):
    return write_json(tmp_path / 'annulus.json', ovals_to_json(annulus_ovals()))


@pytest.fixture
def pigeonhole_file(tmp_path):
    return write_json(tmp_path / 'pigeonhole.json', ovals_to_json(pigeonhole_ovals()))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
