"""
Гиперболическая геометрия единичного круга

Гиперболическое расстояние, отображение Мебиуса G_lambda
и евклидова реализация гиперболических кругов и окружностей.
"""

import cmath
import math
from typing import Tuple

from bloch_lab.linalg import as_complex_scalar
from bloch_lab.utils import DomainError, validate_positive, validate_positive_int
import numpy as np


def _check_in_disk(z: complex, name: str) -> None:
    if abs(z) >= 1:
        raise DomainError(
            f"Точка {name} должна лежать в открытом единичном круге", limit=1.0
        )


def pseudo_hyperbolic(z: complex, w: complex) -> float:
    """Псевдогиперболическое расстояние |(z - w) / (1 - conj(z) w)|"""
    return abs((z - w) / (1 - z.conjugate() * w))


def hyperbolic_distance(z: complex, w: complex) -> float:
    """Гиперболическое расстояние rho(z, w) = arctanh |(z - w)/(1 - conj(z) w)|.

    Args:
        z: Точка единичного круга
        w: Точка единичного круга

    Returns:
        float: Расстояние >= 0, равное нулю только при z = w

    Raises:
        DomainError: Если точка не лежит в открытом единичном круге
    """
    z = as_complex_scalar(z, "z")
    w = as_complex_scalar(w, "w")
    _check_in_disk(z, "z")
    _check_in_disk(w, "w")
    return math.atanh(pseudo_hyperbolic(z, w))


def moebius_G(u: complex, lam: float, a: float) -> complex:  # noqa: N802
    """Отображение Мебиуса G_lambda(u) = lambda (a - u) / (a (1 - a u)).

    G_lambda(0) = lambda, G_lambda(a) = 0.

    Args:
        u: Точка с |u| < 1/a
        lam: Значение lambda
        a: Параметр a из (0, 1)

    Returns:
        complex: G_lambda(u)

    Raises:
        DomainError: Если |u| >= 1/a (в том числе в полюсе u = 1/a)
    """
    u = as_complex_scalar(u, "u")
    validate_positive(a, "a")
    if a >= 1:
        raise DomainError("Параметр a должен лежать в (0, 1)", limit=1.0)
    if abs(u) * a >= 1:
        raise DomainError(
            f"Точка u должна удовлетворять |u| < 1/a = {1 / a!r}", limit=1 / a
        )
    return lam * (a - u) / (a * (1 - a * u))


def hyperbolic_disk_euclidean(b: complex, r: float) -> Tuple[complex, float]:
    """Евклидов центр и радиус гиперболического круга D_h(b, r).

    Args:
        b: Гиперболический центр, |b| < 1
        r: Гиперболический радиус, r > 0

    Returns:
        tuple: (центр, радиус) евклидова круга
    """
    b = as_complex_scalar(b, "b")
    _check_in_disk(b, "b")
    validate_positive(r, "r")
    t = math.tanh(r)
    denominator = 1 - t * t * abs(b) ** 2
    center = b * (1 - t * t) / denominator
    radius = t * (1 - abs(b) ** 2) / denominator
    return center, radius


def hyperbolic_circle_points(b: complex, r: float, count: int) -> np.ndarray:
    """Точки гиперболической окружности S_h(b, r).

    Прообразы точек t e^(i theta), t = tanh r, при отображении
    z -> (z - b)/(1 - conj(b) z), равномерно по theta.

    Returns:
        np.ndarray: Массив count комплексных точек
    """
    b = as_complex_scalar(b, "b")
    _check_in_disk(b, "b")
    validate_positive(r, "r")
    validate_positive_int(count, "count")
    t = math.tanh(r)
    rotations = np.exp(2j * np.pi * np.arange(count) / count)
    w = t * rotations
    return (b + w) / (1 + b.conjugate() * w)


def principal_power(base: np.ndarray, exponent: float) -> np.ndarray:
    """Главная ветвь степени base^exponent (через главный логарифм)"""
    base = np.asarray(base, dtype=np.complex128)
    return np.where(base == 0, 0.0, np.exp(exponent * np.log(np.where(base == 0, 1, base))))


def principal_power_scalar(base: complex, exponent: float) -> complex:
    """Главная ветвь степени для одного числа"""
    if base == 0:
        return 0j
    return cmath.exp(exponent * cmath.log(base))
