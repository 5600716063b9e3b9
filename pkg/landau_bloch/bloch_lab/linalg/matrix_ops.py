"""
Операции над комплексными матрицами

Операторная норма (наибольшее сингулярное число), определитель
и нижняя оценка растяжения |A theta| >= |det A| / |A|^(n-1).
Все функции чистые и не имеют разделяемого состояния.
"""

import logging
from dataclasses import dataclass

from bloch_lab.linalg.complex_matrix import ComplexMatrix
from bloch_lab.utils import DomainError, validate_positive, validate_positive_int
import numpy as np
import scipy.linalg

logger = logging.getLogger(__name__)

# Фиксированное зерно для повторного старта степенного метода
_RESTART_SEED = 20111009


@dataclass(frozen=True)
class PowerIterationConfig:
    """Параметры степенного метода для операторной нормы.

    Атрибуты:
        tolerance (float): Допуск на относительное изменение
                           отношения Рэлея
        max_iterations (int): Максимальное число итераций на один старт
    """

    tolerance: float = 1e-12
    max_iterations: int = 10_000

    def __post_init__(self):
        validate_positive(self.tolerance, "tolerance")
        validate_positive_int(self.max_iterations, "max_iterations")


def _rayleigh_power_iteration(
    gram: np.ndarray, start: np.ndarray, cfg: PowerIterationConfig
) -> float:
    """Наибольшее собственное число эрмитовой матрицы gram = A^H A"""
    x = start / np.linalg.norm(start)
    quotient = float(np.real(np.vdot(x, gram @ x)))
    for iteration in range(cfg.max_iterations):
        y = gram @ x
        y_norm = np.linalg.norm(y)
        if y_norm == 0:
            # x лежит в ядре
            return quotient
        x = y / y_norm
        new_quotient = float(np.real(np.vdot(x, gram @ x)))
        if abs(new_quotient - quotient) <= cfg.tolerance * max(new_quotient, 1e-300):
            logger.debug("Степенной метод сошелся за %d итераций", iteration + 1)
            return new_quotient
        quotient = new_quotient
    logger.warning(
        "Степенной метод не сошелся за %d итераций", cfg.max_iterations
    )
    return quotient


def operator_norm(
    matrix: ComplexMatrix, cfg: PowerIterationConfig = PowerIterationConfig()
) -> float:
    """Операторная норма |A| = max |A theta| по единичным векторам theta.

    Степенной метод на A^H A: детерминированный старт и один
    повторный старт со случайного вектора, чтобы не застрять на
    векторе, ортогональном старшему сингулярному направлению.

    Args:
        matrix: Матрица A
        cfg: Параметры степенного метода

    Returns:
        float: Наибольшее сингулярное число (0 только для нулевой матрицы)
    """
    a = matrix.entries
    if not np.any(a):
        return 0.0
    gram = a.conj().T @ a
    n = matrix.n

    deterministic_start = np.ones(n, dtype=np.complex128)
    rng = np.random.default_rng(_RESTART_SEED)
    random_start = rng.standard_normal(n) + 1j * rng.standard_normal(n)

    best = max(
        _rayleigh_power_iteration(gram, deterministic_start, cfg),
        _rayleigh_power_iteration(gram, random_start, cfg),
    )
    return float(np.sqrt(max(best, 0.0)))


def determinant(matrix: ComplexMatrix) -> complex:
    """Определитель через LU-разложение с частичным выбором ведущего элемента.

    Args:
        matrix: Матрица A

    Returns:
        complex: det A
    """
    lu, pivots = scipy.linalg.lu_factor(matrix.to_numpy(), check_finite=False)
    swaps = int(np.count_nonzero(pivots != np.arange(matrix.n)))
    sign = -1.0 if swaps % 2 else 1.0
    return complex(sign * np.prod(np.diag(lu)))


def lemma_a_lower_bound(
    matrix: ComplexMatrix, cfg: PowerIterationConfig = PowerIterationConfig()
) -> float:
    """Нижняя оценка растяжения |det A| / |A|^(n-1).

    Для любого единичного theta выполнено |A theta| >= результата.

    Args:
        matrix: Матрица A с |A| > 0
        cfg: Параметры степенного метода

    Returns:
        float: Оценка снизу минимального растяжения

    Raises:
        DomainError: Если |A| = 0
    """
    norm = operator_norm(matrix, cfg)
    if norm == 0:
        raise DomainError("Оценка требует ненулевой операторной нормы |A| > 0")
    return abs(determinant(matrix)) / norm ** (matrix.n - 1)
