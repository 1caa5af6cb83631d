"""Случайные конфигурации вложенных окружностей для проверок свойств"""
import math
from typing import List, Optional

import numpy as np

from smoothrig.geometry.ovals import Oval

# Зазор между окружностями; больше стрелки прогиба вписанного 64-угольника
MARGIN = 0.01


def circle_oval(oval_id: int, center, radius: float, vertices: int = 64) -> Oval:
    """Правильный многоугольник, вписанный в окружность, против часовой стрелки"""
    angles = 2.0 * math.pi * np.arange(vertices) / vertices
    cx, cy = center
    return Oval(
        id=oval_id,
        vertices=tuple((cx + radius * math.cos(a), cy + radius * math.sin(a)) for a in angles),
    )


def square_oval(oval_id: int, center, side: float) -> Oval:
    """Квадрат со стороной side, против часовой стрелки"""
    cx, cy = center
    h = side / 2.0
    return Oval(id=oval_id, vertices=(
        (cx - h, cy - h), (cx + h, cy - h), (cx + h, cy + h), (cx - h, cy + h),
    ))


def random_circle_configuration(rng: np.random.Generator, count: int, max_depth: int = 4,
                                vertices: int = 64, attempts: int = 200) -> List[Oval]:
    """
    До count окружностей без пересечений границ, глубина вложенности <= max_depth

    Новая окружность кладётся либо в корень (внутрь единичного круга), либо внутрь
    уже имеющейся окружности, не задевая её остальных детей. Неудачные попытки
    пропускаются, поэтому окружностей может оказаться меньше count.
    """
    circles = []  # (cx, cy, r, parent_index, depth)

    def fits(cx, cy, r, parent: Optional[int]):
        if parent is None:
            if math.hypot(cx, cy) + r > 1.0 - MARGIN:
                return False
        else:
            px, py, pr, _, _ = circles[parent]
            if math.hypot(cx - px, cy - py) + r > pr - MARGIN:
                return False
        for sx, sy, sr, sparent, _ in circles:
            if sparent == parent and math.hypot(cx - sx, cy - sy) < r + sr + MARGIN:
                return False
        return True

    for _ in range(count):
        for _ in range(attempts):
            eligible = [i for i, c in enumerate(circles) if c[4] < max_depth and c[2] > 4 * MARGIN]
            parent = None
            if eligible and rng.random() < 0.6:
                parent = eligible[int(rng.integers(len(eligible)))]
            if parent is None:
                host_x, host_y, host_r = 0.0, 0.0, 1.0
            else:
                host_x, host_y, host_r = circles[parent][:3]
            r = host_r * rng.uniform(0.08, 0.45)
            angle = rng.uniform(0.0, 2.0 * math.pi)
            dist = rng.uniform(0.0, max(host_r - r - MARGIN, 0.0))
            cx = host_x + dist * math.cos(angle)
            cy = host_y + dist * math.sin(angle)
            if fits(cx, cy, r, parent):
                depth = 1 if parent is None else circles[parent][4] + 1
                circles.append((cx, cy, r, parent, depth))
                break

    return [circle_oval(i, (cx, cy), r, vertices) for i, (cx, cy, r, _, _) in enumerate(circles)]
