"""
Гладкая жёсткость нулевых множеств: неравенства Ремеза, вложенные овалы и оценки производных
"""

__version__ = "1.0.0"
