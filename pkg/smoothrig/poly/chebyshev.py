"""Многочлены Чебышёва первого рода"""
from smoothrig.errors import ValidationError
from smoothrig.poly.multipoly import MultiPoly


def chebyshev(d: int) -> MultiPoly:
    """
    T_d по рекуррентной формуле T_0 = 1, T_1 = t, T_{d+1} = 2t*T_d - T_{d-1}
    """
    if d < 0:
        raise ValidationError('InvalidRange', name='d', value=d)
    previous = MultiPoly.constant(1, 1.0)
    if d == 0:
        return previous
    t = MultiPoly.variable(1, 0)
    current = t
    for _ in range(d - 1):
        previous, current = current, 2.0 * t * current - previous
    return current


def chebyshev_value(d: int, x: float) -> float:
    """Значение T_d(x) той же рекуррентой, без построения многочлена"""
    if d < 0:
        raise ValidationError('InvalidRange', name='d', value=d)
    previous, current = 1.0, float(x)
    if d == 0:
        return previous
    for _ in range(d - 1):
        previous, current = current, 2.0 * x * current - previous
    return current
