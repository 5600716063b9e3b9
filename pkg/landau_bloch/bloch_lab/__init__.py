"""
Лаборатория констант Ландау-Блоха

Вычисление констант Ландау-Блоха, точных оценок искажения якобиана,
радиусов шлихт-шаров и радиусов однолистности для пространств Харди
на единичном шаре C^n, а также численная проверка этих оценок
на экстремальных и случайных голоморфных отображениях.

Основные модули:
- linalg: Комплексные матрицы, операторная норма, определитель
- constants: Параметры класса, phi, a0, m(lambda), гиперболическая геометрия
- bounds: Огибающие искажения, радиус шлихт-шара, цепочка для H^p
- maps: Полиномиальные и экстремальные отображения
- services: Выборка, оценки полунорм, проверки и наборы проверок
- reporting: Паспорт запуска, таблицы кривых, сводки наборов
- utils: Валидаторы и исключения
"""

__version__ = "1.0.0"

from .bounds import HardyClassParams, hardy_landau, schlicht_radius_lower
from .constants import BlochClassParams, a0, m_of_lambda, phi
from .linalg import ComplexMatrix, determinant, operator_norm
from .maps import ExtremalMap, PolyMap, eval_map, jacobian
from .services import (
    BoundReport,
    SamplingConfig,
    estimate_alpha_seminorm,
    estimate_det_seminorm,
    estimate_hardy_norm,
    verify_distortion,
    verify_injectivity_sample,
)
from .utils import (
    DomainError,
    ParameterRegimeError,
    PreconditionError,
    QuadratureError,
    SolverError,
)

__all__ = [
    # Linalg
    "ComplexMatrix",
    "determinant",
    "operator_norm",
    # Constants
    "BlochClassParams",
    "a0",
    "m_of_lambda",
    "phi",
    # Bounds
    "HardyClassParams",
    "hardy_landau",
    "schlicht_radius_lower",
    # Maps
    "ExtremalMap",
    "PolyMap",
    "eval_map",
    "jacobian",
    # Services
    "BoundReport",
    "SamplingConfig",
    "estimate_alpha_seminorm",
    "estimate_det_seminorm",
    "estimate_hardy_norm",
    "verify_distortion",
    "verify_injectivity_sample",
    # Errors
    "DomainError",
    "ParameterRegimeError",
    "PreconditionError",
    "QuadratureError",
    "SolverError",
    "__version__",
]
