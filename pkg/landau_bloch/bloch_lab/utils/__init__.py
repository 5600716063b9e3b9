"""
Пакет утилит

Содержит вспомогательные функции валидации и типы исключений:
- validate_*: проверки числовых параметров и областей определения
- DomainError, ParameterRegimeError, PreconditionError,
  SolverError, QuadratureError: исключения библиотеки
"""

from .errors import (
    DomainError,
    ParameterRegimeError,
    PreconditionError,
    QuadratureError,
    SolverError,
)
from .validators import (
    validate_closed_interval,
    validate_finite,
    validate_half_open_unit,
    validate_in_unit_ball,
    validate_positive,
    validate_positive_int,
    validate_radius,
)

__all__ = [
    "DomainError",
    "ParameterRegimeError",
    "PreconditionError",
    "QuadratureError",
    "SolverError",
    "validate_closed_interval",
    "validate_finite",
    "validate_half_open_unit",
    "validate_in_unit_ball",
    "validate_positive",
    "validate_positive_int",
    "validate_radius",
]
