"""
Наборы проверок

Готовые наборы случаев для команды verify:
- extremal: теорема искажения на экстремальных отображениях
- random-poly: теорема искажения на случайных нормированных многочленах
- hardy-injectivity: однолистность в шаре радиуса rho1(r0)
- subordination: включение T(D_h) в круг радиуса r0
Каждый набор возвращает список пар (имя случая, BoundReport).
"""

import itertools
import logging
from typing import Callable, Dict, List, Optional, Tuple

from bloch_lab.bounds import HardyClassParams, hardy_landau
from bloch_lab.constants import BlochClassParams
from bloch_lab.maps import ExtremalMap, PolyMap
from bloch_lab.services.bound_report import ONE_SIDED_NOTE, BoundReport
from bloch_lab.services.estimators import estimate_hardy_norm
from bloch_lab.services.normalization import normalize_for_distortion, random_poly_map
from bloch_lab.services.sampling import SamplingConfig, block_generator
from bloch_lab.services.verification import (
    DEFAULT_SLACK,
    verify_distortion,
    verify_injectivity_sample,
    verify_subordination,
)

logger = logging.getLogger(__name__)

SuiteCases = List[Tuple[str, BoundReport]]

EXTREMAL_ALPHAS = (0.5, 1.0, 2.0)
EXTREMAL_DIMENSIONS = (1, 2, 3)
EXTREMAL_LAMBDAS = (0.25, 0.5, 1.0)

RANDOM_POLY_MAPS = 100
RANDOM_POLY_MAX_DEGREE = 6
SUBORDINATION_RANDOM_MAPS = 10

HARDY_EXPONENTS = (0.5, 1.0, 2.0, 4.0)
HARDY_MARGIN = 1e-3

# Выборка для оценок норм при нормировке
ESTIMATOR_CONFIG = dict(sphere_samples=64, radial_grid=64)
HARDY_ESTIMATOR_CONFIG = dict(sphere_samples=4096, radial_grid=16)


def _extremal_grid():
    return itertools.product(EXTREMAL_ALPHAS, EXTREMAL_DIMENSIONS, EXTREMAL_LAMBDAS)


def _case_name(prefix: str, params: BlochClassParams) -> str:
    return f"{prefix}(alpha={params.alpha:g}, n={params.n}, lambda={params.lam:g})"


def _random_normalized(
    index: int, cfg: SamplingConfig, alpha: float, stream: str
) -> Tuple[PolyMap, BlochClassParams]:
    rng = block_generator(cfg.seed, stream, index)
    degree = 2 + index % (RANDOM_POLY_MAX_DEGREE - 1)
    f = random_poly_map(1, degree, rng)
    estimator_cfg = SamplingConfig(seed=cfg.seed, **ESTIMATOR_CONFIG)
    return normalize_for_distortion(f, alpha, estimator_cfg)


def extremal_suite(cfg: SamplingConfig, slack: float = DEFAULT_SLACK) -> SuiteCases:
    """Теорема искажения на экстремальных отображениях сетки параметров"""
    cases = []
    for alpha, n, lam in _extremal_grid():
        params = BlochClassParams(alpha, n, lam)
        report = verify_distortion(ExtremalMap(params), params, cfg, slack)
        cases.append((_case_name("extremal", params), report))
    return cases


def random_poly_suite(
    cfg: SamplingConfig,
    slack: float = DEFAULT_SLACK,
    map_file_map: Optional[PolyMap] = None,
    alpha: float = 1.0,
) -> SuiteCases:
    """Теорема искажения на случайных нормированных многочленах.

    Без map_file_map: RANDOM_POLY_MAPS одномерных многочленов степени
    2..6, alpha по кругу из {0.5, 1, 2}. С map_file_map - один случай
    для загруженного отображения и заданного alpha.
    """
    if map_file_map is not None:
        estimator_cfg = SamplingConfig(seed=cfg.seed, **ESTIMATOR_CONFIG)
        g, params = normalize_for_distortion(map_file_map, alpha, estimator_cfg)
        return [(_case_name("map-file", params), verify_distortion(g, params, cfg, slack))]

    cases = []
    for index in range(RANDOM_POLY_MAPS):
        case_alpha = EXTREMAL_ALPHAS[index % len(EXTREMAL_ALPHAS)]
        g, params = _random_normalized(index, cfg, case_alpha, "random-poly")
        cases.append((f"random-poly[{index}]", verify_distortion(g, params, cfg, slack)))
    return cases


def _hardy_case(
    f: PolyMap, p: float, k0: float, cfg: SamplingConfig
) -> Tuple[HardyClassParams, float, PolyMap]:
    """Масштабирует f до оценки нормы Харди k0 / (1 + margin) и находит радиус"""
    estimator_cfg = SamplingConfig(seed=cfg.seed, **HARDY_ESTIMATOR_CONFIG)
    norm = estimate_hardy_norm(f, p, estimator_cfg).value
    g = f.scaled(k0 / (norm * (1 + HARDY_MARGIN)))
    lambda0 = float(abs(g.det_jacobian([0.0] * g.n)))
    # Любое K0 не меньше нормы годится, поэтому K0 >= lambda0 обеспечивается увеличением
    params = HardyClassParams(p, g.n, max(k0, lambda0), lambda0)
    return params, hardy_landau(params).rho1_at_r0, g


def hardy_injectivity_suite(
    cfg: SamplingConfig,
    map_file_map: Optional[PolyMap] = None,
    k0: float = 1.0,
) -> SuiteCases:
    """Выборочная однолистность в шаре радиуса rho1(r0) теоремы для H^p.

    Для p из {0.5, 1, 2, 4} и n из {1, 2, 3}: тождественное отображение
    и случайный многочлен, приведенные к норме Харди не больше k0.
    """
    if map_file_map is not None:
        maps: Dict[str, Callable[[int, int], PolyMap]] = {"map-file": lambda n, i: map_file_map}
        dimensions: Tuple[int, ...] = (map_file_map.n,)
    else:
        maps = {
            "identity": lambda n, i: PolyMap.identity(n),
            "random": lambda n, i: random_poly_map(
                n, 3, block_generator(cfg.seed, "hardy-injectivity", i)
            ),
        }
        dimensions = EXTREMAL_DIMENSIONS

    cases = []
    for index, (p, n) in enumerate(itertools.product(HARDY_EXPONENTS, dimensions)):
        for name, build in maps.items():
            params, radius, g = _hardy_case(build(n, index), p, k0, cfg)
            report = verify_injectivity_sample(g, radius, cfg)
            report.details["hardy_params"] = params.to_dict()
            report.notes.append(ONE_SIDED_NOTE)
            cases.append((f"{name}(p={p:g}, n={n})", report))
    return cases


def subordination_suite(cfg: SamplingConfig, slack: float = DEFAULT_SLACK) -> SuiteCases:
    """Включение T(D_h(m, arctanh a0)) в круг радиуса r0.

    Экстремальные отображения сетки параметров и несколько случайных
    нормированных одномерных многочленов.
    """
    cases = []
    for alpha, n, lam in _extremal_grid():
        params = BlochClassParams(alpha, n, lam)
        report = verify_subordination(ExtremalMap(params), params, cfg, slack)
        cases.append((_case_name("extremal", params), report))
    for index in range(SUBORDINATION_RANDOM_MAPS):
        alpha = EXTREMAL_ALPHAS[index % len(EXTREMAL_ALPHAS)]
        g, params = _random_normalized(index, cfg, alpha, "subordination-poly")
        cases.append((f"random-poly[{index}]", verify_subordination(g, params, cfg, slack)))
    return cases


# Объем выборки по умолчанию: sphere_samples, а для hardy-injectivity - pair_samples
DEFAULT_SAMPLES = {
    "extremal": 256,
    "random-poly": 10_000,
    "hardy-injectivity": 10_000,
    "subordination": 256,
}

SUITE_NAMES = ("extremal", "random-poly", "hardy-injectivity", "subordination")


def run_suite(
    suite: str,
    cfg: SamplingConfig,
    slack: float = DEFAULT_SLACK,
    map_file_map: Optional[PolyMap] = None,
    alpha: float = 1.0,
    k0: float = 1.0,
) -> SuiteCases:
    """Запуск набора по имени.

    Raises:
        ValueError: Для неизвестного набора или map_file_map у набора,
                    который его не принимает
    """
    if suite not in SUITE_NAMES:
        raise ValueError(f"Неизвестный набор проверок: {suite}")
    if map_file_map is not None and suite not in ("random-poly", "hardy-injectivity"):
        raise ValueError(f"Набор {suite} не принимает отображение из файла")

    logger.info("Набор %s: seed=%d, выборка %d", suite, cfg.seed, cfg.sphere_samples)
    if suite == "extremal":
        return extremal_suite(cfg, slack)
    if suite == "random-poly":
        return random_poly_suite(cfg, slack, map_file_map, alpha)
    if suite == "hardy-injectivity":
        return hardy_injectivity_suite(cfg, map_file_map, k0)
    return subordination_suite(cfg, slack)
