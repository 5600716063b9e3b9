"""
Теорема искажения и радиус шлихт-шара

Нижняя и верхняя огибающие для det f'(z), их допустимые радиусы,
интегральная оценка радиуса шлихт-шара и оценка роста производной
функций alpha-Блоха.
"""

import logging
import sys
from typing import Tuple

from bloch_lab.bounds.quadrature import QuadratureConfig, integrate_interval
from bloch_lab.constants import BlochClassParams, RootSolverConfig, a0, m_of_lambda
from bloch_lab.utils import DomainError, validate_finite, validate_radius
import numpy as np

logger = logging.getLogger(__name__)


def admissible_radii(
    params: BlochClassParams, solver: RootSolverConfig = RootSolverConfig()
) -> Tuple[float, float]:
    """Радиусы, в которых справедливы нижняя и верхняя оценки.

    Args:
        params: Параметры класса
        solver: Настройки поиска m(lambda)

    Returns:
        tuple: (lower_domain, upper_domain) =
               ((a0 + m)/(1 + a0 m), (a0 - m)/(1 - a0 m))
    """
    root_max = a0(params)
    m = m_of_lambda(params, solver)
    lower_domain = (root_max + m) / (1 + root_max * m)
    upper_domain = max((root_max - m) / (1 - root_max * m), 0.0)
    return lower_domain, upper_domain


def _envelope(z_abs: float, m: float, params: BlochClassParams, sign: int) -> float:
    return (
        params.lam
        * (m + sign * z_abs)
        / (m * (1 + sign * m * z_abs) ** (params.beta + 1))
    )


def distortion_lower(
    z_abs: float,
    params: BlochClassParams,
    solver: RootSolverConfig = RootSolverConfig(),
) -> float:
    """Нижняя оценка Re det f'(z) при |z| = z_abs.

    lambda (m - |z|) / (m (1 - m |z|)^(alpha(n+1)+1)). За точкой m(lambda)
    значение отрицательно и возвращается как есть.

    Args:
        z_abs: Модуль точки
        params: Параметры класса
        solver: Настройки поиска m(lambda)

    Returns:
        float: Значение нижней огибающей

    Raises:
        DomainError: Если z_abs вне [0, (a0 + m)/(1 + a0 m)]
    """
    lower_domain, _ = admissible_radii(params, solver)
    validate_radius(z_abs, "z_abs", lower_domain)
    return _envelope(float(z_abs), m_of_lambda(params, solver), params, -1)


def distortion_upper(
    z_abs: float,
    params: BlochClassParams,
    solver: RootSolverConfig = RootSolverConfig(),
) -> float:
    """Верхняя оценка |det f'(z)| при |z| = z_abs.

    lambda (m + |z|) / (m (1 + m |z|)^(alpha(n+1)+1)).

    Raises:
        DomainError: Если z_abs вне [0, (a0 - m)/(1 - a0 m)]
    """
    _, upper_domain = admissible_radii(params, solver)
    validate_radius(z_abs, "z_abs", upper_domain)
    return _envelope(float(z_abs), m_of_lambda(params, solver), params, +1)


def distortion_envelopes(
    z_abs: np.ndarray,
    params: BlochClassParams,
    kind: str,
    solver: RootSolverConfig = RootSolverConfig(),
) -> np.ndarray:
    """Векторная версия огибающих для массива модулей.

    Args:
        z_abs: Массив модулей точек
        params: Параметры класса
        kind: 'lower' или 'upper'
        solver: Настройки поиска m(lambda)

    Returns:
        np.ndarray: Значения огибающей

    Raises:
        DomainError: Если какой-либо модуль вне допустимого радиуса
    """
    if kind not in ("lower", "upper"):
        raise ValueError("kind должен быть 'lower' или 'upper'")
    values = np.asarray(z_abs, dtype=float)
    lower_domain, upper_domain = admissible_radii(params, solver)
    limit = lower_domain if kind == "lower" else upper_domain
    if values.size:
        validate_radius(float(values.min()), "z_abs", limit)
        validate_radius(float(values.max()), "z_abs", limit)
    sign = -1 if kind == "lower" else 1
    m = m_of_lambda(params, solver)
    return _envelope(values, m, params, sign)


def schlicht_radius_lower(
    params: BlochClassParams,
    cfg: QuadratureConfig = QuadratureConfig(),
    solver: RootSolverConfig = RootSolverConfig(),
) -> float:
    """Нижняя оценка радиуса шлихт-шара r(0, f).

    (lambda K^(1-n) / m) * интеграл по [0, m] от
    (1 - t^2)^(alpha(n-1)) (m - t) / (1 - m t)^(alpha(n+1)+1).
    Интеграл берется после замены t = m s по отрезку [0, 1].

    Args:
        params: Параметры класса (включая K)
        cfg: Настройки квадратуры
        solver: Настройки поиска m(lambda)

    Returns:
        float: Положительный радиус

    Raises:
        QuadratureError: Если квадратура не сошлась
        DomainError: Если радиус меньше наименьшего нормального числа float
    """
    m = m_of_lambda(params, solver)
    weight_power = params.alpha * (params.n - 1)
    denominator_power = params.beta + 1

    def integrand(s: float) -> float:
        t = m * s
        return (1 - t * t) ** weight_power * (1 - s) / (1 - m * t) ** denominator_power

    integral = integrate_interval(integrand, 0.0, 1.0, cfg)
    radius = params.lam * params.K ** (1 - params.n) * m * integral
    if radius < sys.float_info.min:
        raise DomainError(
            f"Радиус шлихт-шара для {params!r} непредставим в float: {radius!r}",
            limit=sys.float_info.min,
        )
    logger.debug("Радиус шлихт-шара для %r: %r", params, radius)
    return radius


def bloch_derivative_bound(seminorm: float, alpha: float, z_abs: float) -> float:
    """Оценка |f'(z)| <= ||f||_alpha / (1 - |z|^2)^alpha.

    Raises:
        DomainError: Если z_abs >= 1
    """
    validate_finite(seminorm, "seminorm")
    if seminorm < 0:
        raise ValueError("Полунорма не может быть отрицательной")
    validate_radius(z_abs, "z_abs", 1.0, inclusive=False)
    return seminorm / (1 - z_abs * z_abs) ** alpha
