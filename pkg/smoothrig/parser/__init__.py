"""Модуль парсинга входных файлов"""
from smoothrig.parser.config_parser import parse_config_file, parse_ovals, config_to_dict
from smoothrig.parser.points_parser import parse_points_file
from smoothrig.parser.poly_parser import parse_poly_file, poly_from_dict, poly_to_dict

__all__ = [
    'parse_config_file', 'parse_ovals', 'config_to_dict', 'parse_points_file',
    'parse_poly_file', 'poly_from_dict', 'poly_to_dict',
]
