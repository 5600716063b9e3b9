"""
Оценки роста

Оценки производной и якобиана ограниченного отображения шара
и лемма Шварца для матричнозначных функций.
"""

from typing import Tuple

from bloch_lab.utils import validate_finite, validate_positive, validate_positive_int, validate_radius


def _validate_bound(value: float, name: str) -> None:
    validate_finite(value, name)
    if value < 0:
        raise ValueError(f"Параметр {name} не может быть отрицательным")


def lemma_b_bounds(M: float, n: int, z_abs: float) -> Tuple[float, float]:  # noqa: N803
    """Оценки для отображения с |f| <= M в единичном шаре.

    Args:
        M: Граница модуля отображения
        n: Размерность
        z_abs: Модуль точки, 0 <= z_abs < 1

    Returns:
        tuple: (M / (1 - |z|^2), M^n / (1 - |z|^2)^((n + 1)/2))

    Raises:
        DomainError: Если z_abs >= 1
    """
    _validate_bound(M, "M")
    validate_positive_int(n, "n")
    validate_radius(z_abs, "z_abs", 1.0, inclusive=False)
    weight = 1 - z_abs * z_abs
    return M / weight, M**n / weight ** ((n + 1) / 2)


def schwarz_matrix_bound(M: float, r: float, z_abs: float) -> float:  # noqa: N803
    """Лемма Шварца: |A(z)| <= (M / r) |z| при A(0) = 0 и |A| <= M в шаре радиуса r.

    Raises:
        DomainError: Если z_abs > r
    """
    _validate_bound(M, "M")
    validate_positive(r, "r")
    validate_radius(z_abs, "z_abs", r, rel_slack=None)
    return M * z_abs / r
