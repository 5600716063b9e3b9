"""
Нормировка тестовых отображений

Приведение полиномиального отображения к гипотезам теоремы искажения
(det f'(0) = lambda из (0, 1], ||f||_{0,alpha} <= 1) и генерация
случайных полиномиальных отображений.
"""

import cmath
import logging
from typing import Tuple

from bloch_lab.constants import BlochClassParams
from bloch_lab.maps import PolyMap
from bloch_lab.services.estimators import estimate_det_seminorm
from bloch_lab.services.sampling import SamplingConfig
from bloch_lab.utils import PreconditionError, validate_positive, validate_positive_int
import numpy as np

logger = logging.getLogger(__name__)

DEFAULT_MARGIN = 1e-3
_DEGENERATE_DET = 1e-12


def normalize_for_distortion(
    f: PolyMap,
    alpha: float,
    cfg: SamplingConfig = SamplingConfig(),
    margin: float = DEFAULT_MARGIN,
) -> Tuple[PolyMap, BlochClassParams]:
    """Нормировка g = c U f для проверки теоремы искажения.

    U = diag(e^(-i arg det f'(0)), 1, ..., 1), c = 1 / (N (1 + margin)),
    где N - оценка снизу ||f||_{0,alpha}. Тогда det g'(0) = c^n |det f'(0)|
    вещественен и положителен, а оценка ||g||_{0,alpha} равна 1/(1 + margin).
    Оценки теоремы используют только ||g||_{0,alpha} <= 1, запас margin
    покрывает погрешность оценки супремума снизу.

    Args:
        f: Полиномиальное отображение с det f'(0) != 0
        alpha: Параметр alpha > 0
        cfg: Настройки выборки для оценки N
        margin: Относительный запас, margin >= 0

    Returns:
        tuple: (g, BlochClassParams(alpha, n, lambda = det g'(0)))

    Raises:
        PreconditionError: Если det f'(0) = 0
    """
    validate_positive(alpha, "alpha")
    if margin < 0:
        raise ValueError("Запас margin не может быть отрицательным")

    det_at_origin = f.det_jacobian([0.0] * f.n)
    if abs(det_at_origin) < _DEGENERATE_DET:
        raise PreconditionError("det f'(0) = 0: нормировка невозможна")

    seminorm = estimate_det_seminorm(f, alpha, cfg)
    factor = 1 / (seminorm * (1 + margin))
    rotation = cmath.exp(-1j * cmath.phase(det_at_origin))
    normalized = f.scaled(factor, rotation)

    lam = float(abs(normalized.det_jacobian([0.0] * f.n)))
    # Вес в нуле равен |det|^(1/n) <= N, поэтому lambda <= (1 + margin)^(-n)
    params = BlochClassParams(alpha, f.n, min(lam, 1.0))
    logger.debug("Нормировка: N = %r, c = %r, lambda = %r", seminorm, factor, lam)
    return normalized, params


def random_poly_map(n: int, degree: int, rng: np.random.Generator) -> PolyMap:
    """Случайное полиномиальное отображение с невырожденной линейной частью.

    Компонента i: постоянный член, z_i с коэффициентом 1 + 0.3 w,
    z_j (j != i) с коэффициентом 0.1 w и по одному одночлену каждой
    полной степени d = 2..degree со случайным вектором показателей
    и коэффициентом 0.5 w / d; w - стандартные комплексные нормальные.

    Args:
        n: Размерность
        degree: Наибольшая полная степень, degree >= 1
        rng: Генератор numpy

    Returns:
        PolyMap: Случайное отображение
    """
    validate_positive_int(n, "n")
    validate_positive_int(degree, "degree")

    def normal() -> complex:
        re, im = rng.standard_normal(2)
        return complex(re, im)

    components = []
    for i in range(n):
        terms = [(0.1 * normal(), (0,) * n)]
        for j in range(n):
            exps = tuple(int(k == j) for k in range(n))
            coefficient = 1 + 0.3 * normal() if i == j else 0.1 * normal()
            terms.append((coefficient, exps))
        for d in range(2, degree + 1):
            exps = tuple(int(e) for e in rng.multinomial(d, [1 / n] * n))
            terms.append((0.5 * normal() / d, exps))
        components.append(terms)
    return PolyMap(n, components)
