"""
Вспомогательные утилиты

Набор функций для валидации числовых параметров.
Используется во всех модулях библиотеки
для проверки корректности входных данных.
"""

import math
from typing import Optional

from bloch_lab.utils.errors import DomainError


def validate_finite(value: complex, name: str) -> None:
    """Проверка, что число (вещественное или комплексное) конечно"""
    parts = (value.real, value.imag) if isinstance(value, complex) else (value,)
    for part in parts:
        if not math.isfinite(part):
            raise ValueError(f"Параметр {name} должен быть конечным числом")


def validate_positive(value: float, name: str) -> None:
    """Проверка строгой положительности"""
    validate_finite(value, name)
    if value <= 0:
        raise ValueError(f"Параметр {name} должен быть положительным")


def validate_positive_int(value: int, name: str, minimum: int = 1) -> None:
    """Проверка целого числа с нижней границей"""
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"Параметр {name} должен быть целым числом")
    if value < minimum:
        raise ValueError(f"Параметр {name} должен быть не меньше {minimum}")


def validate_half_open_unit(value: float, name: str) -> None:
    """Проверка принадлежности полуинтервалу (0, 1]"""
    validate_finite(value, name)
    if not 0 < value <= 1:
        raise ValueError(f"Параметр {name} должен лежать в (0, 1]")


def validate_closed_interval(
    value: float, name: str, low: float, high: float
) -> None:
    """Проверка принадлежности отрезку [low, high]"""
    validate_finite(value, name)
    if not low <= value <= high:
        raise DomainError(
            f"Параметр {name}={value!r} вне отрезка [{low}, {high}]"
        )


def validate_radius(
    value: float,
    name: str,
    limit: float,
    inclusive: bool = True,
    rel_slack: Optional[float] = 1e-12,
) -> None:
    """Проверка, что радиус лежит в [0, limit] (или [0, limit))

    Небольшой относительный допуск rel_slack поглощает ошибки округления
    на границе, например у конца сетки linspace(0, limit).
    """
    validate_finite(value, name)
    slack = (rel_slack or 0.0) * max(abs(limit), 1.0)
    if value < 0:
        raise DomainError(f"Радиус {name} не может быть отрицательным")
    if inclusive and value > limit + slack:
        raise DomainError(
            f"Радиус {name}={value!r} превышает допустимый радиус {limit!r}",
            limit=limit,
        )
    if not inclusive and value >= limit:
        raise DomainError(
            f"Радиус {name}={value!r} должен быть меньше {limit!r}",
            limit=limit,
        )


def validate_in_unit_ball(norm: float, name: str = "z") -> None:
    """Проверка, что точка лежит в открытом единичном шаре"""
    if not math.isfinite(norm):
        raise ValueError(f"Точка {name} должна иметь конечные координаты")
    if norm >= 1:
        raise DomainError(
            f"Точка {name} должна лежать в открытом единичном шаре, "
            f"получено |{name}|={norm!r}",
            limit=1.0,
        )
