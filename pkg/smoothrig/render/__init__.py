"""Модуль визуализации областей"""
from smoothrig.render.svg import render_svg, write_svg

__all__ = ['render_svg', 'write_svg']
