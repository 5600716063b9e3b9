"""
Пакет оценок

Содержит замкнутые формулы оценок:
- distortion: огибающие det f'(z), допустимые радиусы, радиус шлихт-шара
- growth: оценки роста ограниченных отображений и лемма Шварца
- hardy: цепочка констант Ландау-Блоха для пространств Харди
- quadrature: адаптивная квадратура Гаусса-Кронрода
"""

from .distortion import (
    admissible_radii,
    bloch_derivative_bound,
    distortion_envelopes,
    distortion_lower,
    distortion_upper,
    schlicht_radius_lower,
)
from .growth import lemma_b_bounds, schwarz_matrix_bound
from .hardy import (
    HardyClassParams,
    HardyLandauResult,
    hardy_derivative_oscillation_bound,
    hardy_growth_M0,
    hardy_landau,
    hardy_rho0,
    hardy_rho1,
    w1,
    w1_minimize,
)
from .quadrature import QuadratureConfig, integrate_interval, integrate_unit_parameter

__all__ = [
    "HardyClassParams",
    "HardyLandauResult",
    "QuadratureConfig",
    "admissible_radii",
    "bloch_derivative_bound",
    "distortion_envelopes",
    "distortion_lower",
    "distortion_upper",
    "hardy_derivative_oscillation_bound",
    "hardy_growth_M0",
    "hardy_landau",
    "hardy_rho0",
    "hardy_rho1",
    "integrate_interval",
    "integrate_unit_parameter",
    "lemma_b_bounds",
    "schlicht_radius_lower",
    "schwarz_matrix_bound",
    "w1",
    "w1_minimize",
]
