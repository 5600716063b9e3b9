"""
Оценки полунорм методом Монте-Карло

Полунормы alpha-Блоха и det-Блоха оцениваются снизу как максимум
весовой функции по стратифицированной выборке (сетка радиусов,
умноженная на равномерные направления, плюс начало координат)
с последующим локальным подъемом от лучших точек.
Норма Харди оценивается средними по сферам с оценкой
стандартной ошибки.
"""

import heapq
import logging
from dataclasses import dataclass
from typing import Callable, List, Optional

from bloch_lab.maps import HolomorphicMap
from bloch_lab.services.sampling import SamplingConfig, radial_grid, sphere_points
from bloch_lab.utils import validate_positive
import numpy as np

logger = logging.getLogger(__name__)

WeightFunction = Callable[[HolomorphicMap, np.ndarray], np.ndarray]

# Начальный шаг локального подъема и порог его остановки
_INITIAL_STEP = 0.05
_MIN_STEP = 1e-12


@dataclass(frozen=True)
class SupremumEstimate:
    """Оценка снизу супремума весовой функции.

    Атрибуты:
        value (float): Итоговая оценка (не меньше sampled_value)
        sampled_value (float): Максимум по выборке
        refinement_delta (float): Прирост за счет локального подъема
        location (list): Точка, где достигнута оценка
    """

    value: float
    sampled_value: float
    refinement_delta: float
    location: List[complex]


@dataclass(frozen=True)
class HardyNormEstimate:
    """Оценка снизу нормы Харди.

    Атрибуты:
        value (float): Максимум по радиусам средних (int |f(r zeta)|^p d sigma)^(1/p)
        standard_error (float): Стандартная ошибка на выбранном радиусе
        radius (float): Радиус, на котором достигнут максимум
    """

    value: float
    standard_error: float
    radius: float


def alpha_weight(alpha: float) -> WeightFunction:
    """Весовая функция (1 - |z|^2)^alpha |f'(z)|"""

    def weight(f: HolomorphicMap, points: np.ndarray) -> np.ndarray:
        jacobians = f.jacobian_batch(points)
        norms = np.linalg.norm(jacobians, ord=2, axis=(1, 2))
        return (1 - np.sum(np.abs(points) ** 2, axis=1)) ** alpha * norms

    return weight


def det_weight(alpha: float) -> WeightFunction:
    """Весовая функция (1 - |z|^2)^(alpha(n+1)/(2n)) |det f'(z)|^(1/n)"""

    def weight(f: HolomorphicMap, points: np.ndarray) -> np.ndarray:
        n = f.n
        dets = np.abs(f.det_jacobian_batch(points))
        power = alpha * (n + 1) / (2 * n)
        return (1 - np.sum(np.abs(points) ** 2, axis=1)) ** power * dets ** (1 / n)

    return weight


def _climb_candidates(point: np.ndarray, step: float) -> np.ndarray:
    n = point.size
    moves = np.concatenate([np.eye(n), 1j * np.eye(n)]) * step
    candidates = np.concatenate([point + moves, point - moves])
    inside = np.sum(np.abs(candidates) ** 2, axis=1) < 1
    return candidates[inside]


def _hill_climb(
    weight: WeightFunction,
    f: HolomorphicMap,
    start: np.ndarray,
    start_value: float,
    steps: int,
) -> tuple:
    """Покоординатный подъем по вещественным и мнимым частям с дроблением шага"""
    point, value, step = start.copy(), start_value, _INITIAL_STEP
    for _ in range(steps):
        candidates = _climb_candidates(point, step)
        if candidates.size:
            values = weight(f, candidates)
            best = int(np.argmax(values))
            if values[best] > value:
                point, value = candidates[best], float(values[best])
                continue
        step /= 2
        if step < _MIN_STEP:
            break
    return point, value


def _record_indices(values: np.ndarray, k: int) -> List[int]:
    """Номера точек, входящих в k лучших среди всех предыдущих в момент появления.

    Для префикса последовательности это множество содержится в множестве
    для любого более длинного префикса и включает k лучших точек префикса.
    """
    count = values.size
    head = min(k, count)
    records = list(range(head))
    top = sorted(float(v) for v in values[:head])
    position = head
    while position < count:
        above = values[position:] > top[0]
        offset = int(np.argmax(above))
        if not above[offset]:
            break
        position += offset
        records.append(position)
        heapq.heapreplace(top, float(values[position]))
        position += 1
    return records


def estimate_supremum(
    weight: WeightFunction,
    f: HolomorphicMap,
    cfg: SamplingConfig = SamplingConfig(),
    stream: str = "supremum",
) -> SupremumEstimate:
    """Оценка снизу супремума весовой функции по открытому шару.

    Точки выборки упорядочены: начало координат, затем направления
    по номеру, для каждого направления все радиусы сетки. Подъем
    начинается от каждой точки, которая при своем появлении входит
    в cfg.refine_starts лучших. При увеличении cfg.sphere_samples
    выборка и множество стартов только расширяются, поэтому оценка
    не убывает.

    Args:
        weight: Весовая функция (отображение, пакет точек) -> значения
        f: Отображение
        cfg: Настройки выборки
        stream: Имя потока случайных чисел

    Returns:
        SupremumEstimate: Оценка, ее выборочная часть и прирост от уточнения
    """
    directions = sphere_points(cfg.seed, stream, cfg.sphere_samples, f.n)
    radii = radial_grid(cfg.radial_grid)

    origin = np.zeros((1, f.n), dtype=np.complex128)
    grid_values = np.column_stack([weight(f, radius * directions) for radius in radii])
    values = np.concatenate([weight(f, origin), grid_values.ravel()])

    def point_at(index: int) -> np.ndarray:
        if index == 0:
            return origin[0]
        direction, radius = divmod(index - 1, radii.size)
        return radii[radius] * directions[direction]

    best = int(np.argmax(values))
    sampled_value = float(values[best])
    value, location = sampled_value, point_at(best)

    if cfg.refine_steps:
        starts = _record_indices(values, cfg.refine_starts)
        for index in starts:
            point, refined = _hill_climb(
                weight, f, point_at(index), float(values[index]), cfg.refine_steps
            )
            if refined > value:
                value, location = refined, point
        logger.debug("Подъем от %d стартовых точек", len(starts))

    logger.debug(
        "Супремум: выборка %r, уточнение %r (+%.3e)", sampled_value, value, value - sampled_value
    )
    return SupremumEstimate(
        value=value,
        sampled_value=sampled_value,
        refinement_delta=value - sampled_value,
        location=[complex(c) for c in location],
    )


def estimate_alpha_seminorm(
    f: HolomorphicMap, alpha: float, cfg: SamplingConfig = SamplingConfig()
) -> float:
    """Оценка снизу полунормы alpha-Блоха sup (1 - |z|^2)^alpha |f'(z)|"""
    validate_positive(alpha, "alpha")
    return estimate_supremum(alpha_weight(alpha), f, cfg, "alpha-seminorm").value


def estimate_det_seminorm(
    f: HolomorphicMap, alpha: float, cfg: SamplingConfig = SamplingConfig()
) -> float:
    """Оценка снизу полунормы sup (1 - |z|^2)^(alpha(n+1)/(2n)) |det f'(z)|^(1/n)"""
    validate_positive(alpha, "alpha")
    return estimate_supremum(det_weight(alpha), f, cfg, "det-seminorm").value


def estimate_hardy_norm(
    f: HolomorphicMap,
    p: float,
    cfg: SamplingConfig = SamplingConfig(),
    radii: Optional[np.ndarray] = None,
) -> HardyNormEstimate:
    """Оценка снизу нормы Харди ||f||_p.

    Средние |f(r zeta)|^p по равномерной выборке сферы для каждого
    радиуса сетки; сетка включает граничный радиус 1, так как
    отображения библиотеки голоморфны в окрестности замкнутого шара,
    а средние не убывают по r.

    Args:
        f: Отображение
        p: Показатель Харди, p > 0
        cfg: Настройки выборки
        radii: Собственная сетка радиусов (по умолчанию сгущающаяся к 1)

    Returns:
        HardyNormEstimate: Оценка, стандартная ошибка и радиус максимума
    """
    validate_positive(p, "p")
    directions = sphere_points(cfg.seed, "hardy-sphere", cfg.sphere_samples, f.n)
    if radii is None:
        radii = radial_grid(cfg.radial_grid, include_boundary=True)

    best = HardyNormEstimate(value=-np.inf, standard_error=0.0, radius=0.0)
    count = directions.shape[0]
    for radius in radii:
        moduli = np.linalg.norm(f.evaluate_batch(radius * directions), axis=1) ** p
        mean = float(np.mean(moduli))
        mean_error = float(np.std(moduli, ddof=1) / np.sqrt(count)) if count > 1 else 0.0
        value = mean ** (1 / p)
        # Дельта-метод для g(x) = x^(1/p)
        error = value / (p * mean) * mean_error if mean > 0 else 0.0
        if value > best.value:
            best = HardyNormEstimate(value=value, standard_error=error, radius=float(radius))

    logger.debug("Норма Харди p=%r: %r +- %r на r=%r", p, best.value, best.standard_error, best.radius)
    return best
