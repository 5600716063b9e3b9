"""
Пакет констант класса Блоха

Содержит скалярные специальные функции:
- BlochClassParams, RootSolverConfig: параметры и настройки
- phi, a0, m_of_lambda: функция phi, ее максимум и обратная функция
- hyperbolic_distance, moebius_G: гиперболическая геометрия круга
"""

from .hyperbolic import (
    hyperbolic_circle_points,
    hyperbolic_disk_euclidean,
    hyperbolic_distance,
    moebius_G,
    principal_power,
    principal_power_scalar,
    pseudo_hyperbolic,
)
from .params import BlochClassParams, RootSolverConfig
from .special_functions import (
    a0,
    m_of_lambda,
    phi,
    phi_derivative,
    subordination_radius,
    trace_modulus_bound,
)

__all__ = [
    "BlochClassParams",
    "RootSolverConfig",
    "a0",
    "hyperbolic_circle_points",
    "hyperbolic_disk_euclidean",
    "hyperbolic_distance",
    "m_of_lambda",
    "moebius_G",
    "phi",
    "phi_derivative",
    "principal_power",
    "principal_power_scalar",
    "pseudo_hyperbolic",
    "subordination_radius",
    "trace_modulus_bound",
]
