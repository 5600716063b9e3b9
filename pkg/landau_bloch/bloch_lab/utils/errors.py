"""
Исключения библиотеки

Все типы наследуются от встроенных ValueError / RuntimeError,
поэтому код, перехватывающий стандартные исключения, продолжает работать.
"""

from typing import Optional, Tuple


class DomainError(ValueError):
    """Аргумент вне области определения операции.

    Атрибуты:
        limit (float | None): Граница области, если она известна
    """

    def __init__(self, message: str, limit: Optional[float] = None):
        super().__init__(message)
        self.limit = limit


class ParameterRegimeError(ValueError):
    """Параметры корректны, но не выполнена гипотеза доказательства."""


class PreconditionError(ValueError):
    """Не выполнена нормировка, которую обязан обеспечить вызывающий код."""


class SolverError(RuntimeError):
    """Метод поиска корня не сошелся.

    Атрибуты:
        bracket (tuple): Последний отрезок локализации (lo, hi)
    """

    def __init__(self, message: str, bracket: Tuple[float, float]):
        super().__init__(f"{message}; последний отрезок: {bracket}")
        self.bracket = bracket


class QuadratureError(RuntimeError):
    """Квадратура не достигла требуемой точности.

    Атрибуты:
        error_estimate (float): Достигнутая оценка погрешности
    """

    def __init__(self, message: str, error_estimate: float):
        super().__init__(f"{message}; оценка погрешности: {error_estimate:.3e}")
        self.error_estimate = error_estimate
