"""Многочлены многих переменных в плотном представлении «показатель -> коэффициент»"""
import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

import numpy as np

from smoothrig.config import BASIS_SIZE_LIMIT
from smoothrig.errors import ValidationError

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class MultiPoly:
    """
    Вещественный многочлен от nvars переменных

    terms: показатель (кортеж длины nvars) -> коэффициент; нулевые коэффициенты не хранятся
    """

    nvars: int
    terms: Mapping[Exponent, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.nvars < 1:
            raise ValidationError('DimensionMismatch', expected='>= 1', actual=self.nvars)
        cleaned = {}
        for exp, coef in self.terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.nvars or any(e < 0 for e in exp):
                raise ValidationError('DimensionMismatch', expected=self.nvars, actual=exp)
            if coef != 0:
                cleaned[exp] = cleaned.get(exp, 0.0) + float(coef)
        object.__setattr__(self, 'terms', {e: c for e, c in cleaned.items() if c != 0})

    # Конструкторы

    @classmethod
    def constant(cls, nvars, value):
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars, axis):
        exp = [0] * nvars
        exp[axis] = 1
        return cls(nvars, {tuple(exp): 1.0})

    @classmethod
    def univariate(cls, coeffs: Sequence[float]):
        """Многочлен от t по коэффициентам при 1, t, t^2, ..."""
        return cls(1, {(k,): c for k, c in enumerate(coeffs)})

    @classmethod
    def from_coefficients(cls, nvars, exponents: Sequence[Exponent], coeffs: Sequence[float]):
        return cls(nvars, {tuple(e): c for e, c in zip(exponents, coeffs)})

    # Свойства

    @property
    def degree(self):
        """Полная степень; у нулевого многочлена -1"""
        if not self.terms:
            return -1
        return max(sum(exp) for exp in self.terms)

    @property
    def is_zero(self):
        return not self.terms

    def coefficient_norm(self):
        """Максимум модулей коэффициентов"""
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def coefficients(self):
        """Коэффициенты одномерного многочлена при 1, t, ..., t^degree"""
        if self.nvars != 1:
            raise ValidationError('DimensionMismatch', expected=1, actual=self.nvars)
        out = [0.0] * (self.degree + 1)
        for (k,), c in self.terms.items():
            out[k] = c
        return out

    # Арифметика

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValidationError('DimensionMismatch', expected=self.nvars, actual=other.nvars)
            return other
        return MultiPoly.constant(self.nvars, float(other))

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for exp, coef in other.terms.items():
            terms[exp] = terms.get(exp, 0.0) + coef
        return MultiPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return MultiPoly(self.nvars, {e: c * float(other) for e, c in self.terms.items()})
        other = self._coerce(other)
        terms: Dict[Exponent, float] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                terms[exp] = terms.get(exp, 0.0) + c1 * c2
        return MultiPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if power < 0:
            raise ValidationError('InvalidRange', name='power', value=power)
        result = MultiPoly.constant(self.nvars, 1.0)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    # Вычисление

    def __call__(self, *point):
        if len(point) == 1 and np.ndim(point[0]) > 0:
            point = tuple(point[0])
        return eval_poly(self, point)

    def values(self, points) -> np.ndarray:
        """
        Значения в наборе точек

        Args:
            points: массив формы (m, nvars) или (m,) для одной переменной

        Returns:
            Массив формы (m,)
        """
        pts = np.asarray(points, dtype=float)
        if pts.ndim == 1 and self.nvars == 1:
            pts = pts[:, None]
        if pts.ndim != 2 or pts.shape[1] != self.nvars:
            raise ValidationError('DimensionMismatch', expected=self.nvars, actual=pts.shape)
        out = np.zeros(pts.shape[0])
        if not self.terms:
            return out
        top = max(max(exp) for exp in self.terms)
        # Таблица степеней по каждой оси: powers[axis][k] = x_axis^k
        powers = [np.vander(pts[:, axis], top + 1, increasing=True).T for axis in range(self.nvars)]
        for exp, coef in self.terms.items():
            term = np.full(pts.shape[0], coef)
            for axis, e in enumerate(exp):
                if e:
                    term = term * powers[axis][e]
            out += term
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        names = ['x', 'y', 'z'] if self.nvars <= 3 else [f"x{i}" for i in range(self.nvars)]
        if self.nvars == 1:
            names = ['t']
        parts = []
        for exp in sorted(self.terms, key=lambda e: (-sum(e), tuple(-k for k in e))):
            mono = "*".join(f"{names[i]}^{e}" if e > 1 else names[i] for i, e in enumerate(exp) if e)
            coef = self.terms[exp]
            parts.append(f"{coef:+.6g}" + (f"*{mono}" if mono else ""))
        return " ".join(parts)


def eval_poly(p: MultiPoly, x: Sequence[float]) -> float:
    """Значение многочлена в точке x (сумма мономов)"""
    if len(x) != p.nvars:
        raise ValidationError('DimensionMismatch', expected=p.nvars, actual=len(x))
    total = 0.0
    for exp, coef in p.terms.items():
        term = coef
        for xi, e in zip(x, exp):
            if e:
                term *= float(xi) ** e
        total += term
    return total


def partial_derivative(p: MultiPoly, axis: int) -> MultiPoly:
    """Формальная частная производная по переменной axis"""
    if not 0 <= axis < p.nvars:
        raise ValidationError('DimensionMismatch', expected=f"0..{p.nvars - 1}", actual=axis)
    terms = {}
    for exp, coef in p.terms.items():
        e = exp[axis]
        if e == 0:
            continue
        lowered = list(exp)
        lowered[axis] = e - 1
        terms[tuple(lowered)] = coef * e
    return MultiPoly(p.nvars, terms)


def derivative(p: MultiPoly, alpha: Sequence[int]) -> MultiPoly:
    """
    Производная по мультииндексу alpha

    Множитель считается целым числом (убывающие факториалы), поэтому результат
    не зависит от порядка дифференцирования.
    """
    if len(alpha) != p.nvars:
        raise ValidationError('DimensionMismatch', expected=p.nvars, actual=len(alpha))
    terms = {}
    for exp, coef in p.terms.items():
        if any(e < a for e, a in zip(exp, alpha)):
            continue
        factor = 1
        for e, a in zip(exp, alpha):
            factor *= math.perm(e, a)
        terms[tuple(e - a for e, a in zip(exp, alpha))] = coef * factor
    return MultiPoly(p.nvars, terms)


def multi_indices(nvars: int, k: int) -> List[Exponent]:
    """Все мультииндексы длины nvars с |alpha| = k, каждый по одному разу"""
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), k):
        alpha = [0] * nvars
        for axis in combo:
            alpha[axis] += 1
        out.append(tuple(alpha))
    return out


def derivative_norm_pointwise(p: MultiPoly, k: int, x: Sequence[float]) -> float:
    """
    Сумма модулей всех частных производных порядка k в точке x

    Каждый различный мультииндекс учитывается один раз, без мультиномиальной кратности.
    """
    if k < 0:
        raise ValidationError('InvalidRange', name='k', value=k)
    if len(x) != p.nvars:
        raise ValidationError('DimensionMismatch', expected=p.nvars, actual=len(x))
    if k > p.degree:
        return 0.0
    return sum(abs(eval_poly(derivative(p, alpha), x)) for alpha in multi_indices(p.nvars, k))


def derivative_norm_values(p: MultiPoly, k: int, points) -> np.ndarray:
    """Поточечная норма производных порядка k сразу во множестве точек"""
    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1:
        pts = pts[:, None]
    out = np.zeros(pts.shape[0])
    if k > p.degree:
        return out
    for alpha in multi_indices(p.nvars, k):
        out += np.abs(derivative(p, alpha).values(pts))
    return out


def derivative_norm_global(p: MultiPoly, k: int, points) -> float:
    """Максимум поточечной нормы порядка k по набору точек"""
    values = derivative_norm_values(p, k, points)
    return float(values.max()) if values.size else 0.0


def compose(f: MultiPoly, omega: Sequence[MultiPoly]) -> MultiPoly:
    """
    Точная композиция g(t) = f(omega_1(t), ..., omega_n(t))

    Подстановка выполняется помономно с кэшем степеней каждой компоненты.
    """
    if len(omega) != f.nvars:
        raise ValidationError('DimensionMismatch', expected=f.nvars, actual=len(omega))
    for component in omega:
        if component.nvars != 1:
            raise ValidationError('DimensionMismatch', expected=1, actual=component.nvars)
    cache: Dict[Tuple[int, int], MultiPoly] = {}

    def power(axis, e):
        key = (axis, e)
        if key not in cache:
            cache[key] = MultiPoly.constant(1, 1.0) if e == 0 else power(axis, e - 1) * omega[axis]
        return cache[key]

    result = MultiPoly(1, {})
    for exp, coef in f.terms.items():
        term = MultiPoly.constant(1, coef)
        for axis, e in enumerate(exp):
            if e:
                term = term * power(axis, e)
        result = result + term
    return result


def basis_size(n: int, d: int) -> int:
    """Размерность пространства многочленов степени <= d от n переменных: C(n+d, n)"""
    if n < 1 or d < 0:
        raise ValidationError('InvalidRange', name='(n, d)', value=(n, d))
    size = math.comb(n + d, n)
    if size > BASIS_SIZE_LIMIT:
        raise ValidationError('Overflow', n=n, d=d)
    return size


def graded_exponents(n: int, d: int) -> List[Exponent]:
    """Мономы степени <= d в градуированном лексикографическом порядке"""
    basis_size(n, d)
    out = []
    for total in range(d + 1):
        level = [alpha for alpha in multi_indices(n, total)]
        out.extend(sorted(level, reverse=True))
    return out


def monomial_matrix(points, exponents: Iterable[Exponent]) -> np.ndarray:
    """Матрица значений мономов: строка на точку, столбец на показатель"""
    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1:
        pts = pts[:, None]
    exponents = list(exponents)
    columns = []
    for exp in exponents:
        col = np.ones(pts.shape[0])
        for axis, e in enumerate(exp):
            if e:
                col = col * pts[:, axis] ** e
        columns.append(col)
    return np.column_stack(columns) if columns else np.zeros((pts.shape[0], 0))
