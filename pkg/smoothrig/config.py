"""Конфигурация приложения"""
import os
from dotenv import load_dotenv

load_dotenv()

# Геометрия: число точек на овал при дискретизации Z и шаг сетки шара (2 / GRID_STEPS)
SAMPLES_PER_OVAL = int(os.getenv("SMOOTHRIG_SAMPLES_PER_OVAL", "256"))
GRID_STEPS = int(os.getenv("SMOOTHRIG_GRID_STEPS", "64"))

# Линейное программирование
LP_TOLERANCE = float(os.getenv("SMOOTHRIG_LP_TOLERANCE", "1e-9"))
UNBOUNDED_THRESHOLD = float(os.getenv("SMOOTHRIG_UNBOUNDED_THRESHOLD", "1e12"))
BASIS_SIZE_LIMIT = int(os.getenv("SMOOTHRIG_BASIS_SIZE_LIMIT", "20000"))

# Факториалы считаются в плавающей точке только до этой степени
MAX_FACTORIAL_DEGREE = int(os.getenv("SMOOTHRIG_MAX_FACTORIAL_DEGREE", "18"))

# Критические точки
CRITICAL_GRID = int(os.getenv("SMOOTHRIG_CRITICAL_GRID", "64"))
MERGE_RADIUS = float(os.getenv("SMOOTHRIG_MERGE_RADIUS", "1e-6"))
PERTURBATION_SCALE = float(os.getenv("SMOOTHRIG_PERTURBATION_SCALE", "1e-6"))
NEWTON_ITERATIONS = int(os.getenv("SMOOTHRIG_NEWTON_ITERATIONS", "60"))

# Одномерные сечения и тестовые кривые
BISECTION_TOL = float(os.getenv("SMOOTHRIG_BISECTION_TOL", "1e-10"))
LINE_SAMPLES = int(os.getenv("SMOOTHRIG_LINE_SAMPLES", "2048"))
CURVE_STEPS = int(os.getenv("SMOOTHRIG_CURVE_STEPS", "4096"))
RHS_THRESHOLD = float(os.getenv("SMOOTHRIG_RHS_THRESHOLD", "1e-12"))


def _parse_scales(raw):
    """Разобрать список масштабов вида "0.25,0.125,..." """
    return [float(part) for part in raw.split(',') if part.strip()]


# Диадические масштабы 2^-2 ... 2^-8 для подсчёта клеток
DEFAULT_SCALES = _parse_scales(
    os.getenv("SMOOTHRIG_DEFAULT_SCALES", ",".join(str(2.0 ** -k) for k in range(2, 9)))
)

# Log level
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
