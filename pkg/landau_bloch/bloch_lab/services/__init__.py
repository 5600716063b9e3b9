"""
Пакет сервисов

Содержит выборку, оценки и проверки на живых отображениях:
- sampling: детерминированная выборка точек сферы и шара
- estimators: оценки снизу полунорм Блоха и нормы Харди
- verification: проверка оценок искажения, следа и однолистности
- normalization: нормировка и генерация тестовых отображений
- map_loader: загрузка и сохранение PolyMap в JSON
- suites: наборы проверок команды verify
"""

from .bound_report import BoundReport
from .estimators import (
    HardyNormEstimate,
    SupremumEstimate,
    alpha_weight,
    det_weight,
    estimate_alpha_seminorm,
    estimate_det_seminorm,
    estimate_hardy_norm,
    estimate_supremum,
)
from .map_loader import clean_terms, load_poly_map, poly_map_from_dict, save_poly_map
from .normalization import normalize_for_distortion, random_poly_map
from .sampling import SamplingConfig, ball_points, block_generator, radial_grid, sphere_points
from .verification import (
    subordination_trace,
    verify_distortion,
    verify_injectivity_sample,
    verify_subordination,
)
from .suites import DEFAULT_SAMPLES, SUITE_NAMES, run_suite

__all__ = [
    "DEFAULT_SAMPLES",
    "SUITE_NAMES",
    "BoundReport",
    "HardyNormEstimate",
    "SamplingConfig",
    "SupremumEstimate",
    "alpha_weight",
    "ball_points",
    "block_generator",
    "clean_terms",
    "det_weight",
    "estimate_alpha_seminorm",
    "estimate_det_seminorm",
    "estimate_hardy_norm",
    "estimate_supremum",
    "load_poly_map",
    "normalize_for_distortion",
    "poly_map_from_dict",
    "radial_grid",
    "random_poly_map",
    "run_suite",
    "save_poly_map",
    "sphere_points",
    "subordination_trace",
    "verify_distortion",
    "verify_injectivity_sample",
    "verify_subordination",
]
