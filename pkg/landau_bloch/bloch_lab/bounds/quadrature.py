"""
Адаптивная квадратура

Обертки над квадратурами Гаусса-Кронрода из scipy.integrate:
скалярный интеграл по отрезку и векторный интеграл по параметру
отрезка (для пакетного интегрирования вдоль множества отрезков).
"""

import logging
from dataclasses import dataclass
from typing import Callable

from bloch_lab.utils import QuadratureError, validate_positive, validate_positive_int
import numpy as np
from scipy import integrate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuadratureConfig:
    """Настройки адаптивной квадратуры.

    Атрибуты:
        abs_tolerance (float): Абсолютный допуск
        max_subdivisions (int): Максимальное число подотрезков
    """

    abs_tolerance: float = 1e-10
    max_subdivisions: int = 200

    def __post_init__(self):
        validate_positive(self.abs_tolerance, "abs_tolerance")
        validate_positive_int(self.max_subdivisions, "max_subdivisions")


def integrate_interval(
    func: Callable[[float], float],
    lower: float,
    upper: float,
    cfg: QuadratureConfig = QuadratureConfig(),
) -> float:
    """Интеграл вещественной функции по отрезку [lower, upper].

    Args:
        func: Подынтегральная функция
        lower: Нижний предел
        upper: Верхний предел
        cfg: Настройки квадратуры

    Returns:
        float: Значение интеграла

    Raises:
        QuadratureError: Если требуемая точность не достигнута
    """
    result = integrate.quad(
        func,
        lower,
        upper,
        epsabs=cfg.abs_tolerance,
        epsrel=0.0,
        limit=cfg.max_subdivisions,
        full_output=1,
    )
    value, error = result[0], result[1]
    # При проблемах сходимости quad добавляет в ответ текстовое сообщение
    if len(result) > 3:
        raise QuadratureError(f"Квадратура не сошлась: {result[3]}", error)
    logger.debug(
        "Интеграл на [%r, %r] = %r (погрешность %.2e, вычислений %d)",
        lower, upper, value, error, result[2]["neval"],
    )
    return float(value)


def integrate_unit_parameter(
    func: Callable[[float], np.ndarray],
    abs_tolerance: float = 1e-12,
    max_subdivisions: int = 200,
) -> np.ndarray:
    """Векторный интеграл по параметру s из [0, 1].

    Комплексные значения интегрируются как пары вещественных
    компонент, затем собираются обратно.

    Args:
        func: Функция s -> комплексный массив фиксированной формы
        abs_tolerance: Абсолютный допуск (по максимуму компонент)
        max_subdivisions: Максимальное число подотрезков

    Returns:
        np.ndarray: Комплексный массив интегралов

    Raises:
        QuadratureError: Если требуемая точность не достигнута
    """

    def stacked(s: float) -> np.ndarray:
        values = np.asarray(func(s), dtype=np.complex128)
        return np.concatenate([values.real.ravel(), values.imag.ravel()])

    shape = np.shape(func(0.0))
    value, error, info = integrate.quad_vec(
        stacked,
        0.0,
        1.0,
        epsabs=abs_tolerance,
        epsrel=0.0,
        norm="max",
        limit=max_subdivisions,
        full_output=True,
    )
    if info.status != 0:
        raise QuadratureError(f"Векторная квадратура не сошлась: {info.message}", error)
    half = value.size // 2
    return (value[:half] + 1j * value[half:]).reshape(shape)
