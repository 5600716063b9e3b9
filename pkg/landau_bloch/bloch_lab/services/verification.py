"""
Проверка оценок на конкретных отображениях

Численная проверка теоремы искажения, оценки следа T(u),
включения T(D_h) в круг радиуса r0 и выборочная проверка
однолистности. Результат каждой проверки - BoundReport.
"""

import cmath
import logging
import math
from typing import Sequence

from bloch_lab.bounds import admissible_radii, distortion_envelopes
from bloch_lab.constants import (
    BlochClassParams,
    RootSolverConfig,
    a0,
    hyperbolic_circle_points,
    hyperbolic_disk_euclidean,
    m_of_lambda,
    principal_power,
    principal_power_scalar,
    subordination_radius,
)
from bloch_lab.linalg import as_complex_scalar
from bloch_lab.maps import HolomorphicMap
from bloch_lab.services.bound_report import ONE_SIDED_NOTE, BoundReport
from bloch_lab.services.sampling import (
    SamplingConfig,
    ball_points,
    sphere_points,
    uniform_block,
)
from bloch_lab.utils import DomainError, PreconditionError, validate_radius
import numpy as np

logger = logging.getLogger(__name__)

NORMALIZATION_TOLERANCE = 1e-9
DEFAULT_SLACK = 1e-9

# Пороги выборочной проверки однолистности
INJECTIVITY_IMAGE_GAP = 1e-12
INJECTIVITY_DOMAIN_GAP = 1e-6
ROTATIONS = (-1.0, cmath.exp(2j * math.pi / 3), 1j)


def _check_normalization(f: HolomorphicMap, params: BlochClassParams) -> None:
    if f.n != params.n:
        raise ValueError("Размерность отображения не совпадает с параметрами")
    det_at_origin = complex(f.det_jacobian_batch(np.zeros((1, f.n)))[0])
    if abs(det_at_origin - params.lam) > NORMALIZATION_TOLERANCE:
        raise PreconditionError(
            f"det f'(0) = {det_at_origin!r} не совпадает с lambda = {params.lam!r}"
        )


def _first_axis(values: np.ndarray, n: int) -> np.ndarray:
    points = np.zeros((values.size, n), dtype=np.complex128)
    points[:, 0] = values
    return points


def verify_distortion(
    f: HolomorphicMap,
    params: BlochClassParams,
    cfg: SamplingConfig = SamplingConfig(),
    slack: float = DEFAULT_SLACK,
    solver: RootSolverConfig = RootSolverConfig(),
) -> BoundReport:
    """Проверка нижней и верхней оценок теоремы искажения.

    Точки берутся равномерно в допустимых шарах (cfg.sphere_samples точек
    на каждую оценку) и на лучах вдоль первой координаты (cfg.radial_grid + 1
    точек): на положительном луче достигается нижняя оценка, на
    отрицательном - верхняя. Наибольший |запас| на этих лучах возвращается
    как sharpness_gap.

    Args:
        f: Отображение с det f'(0) = lambda и ||f||_{0,alpha} <= 1
        params: Параметры класса
        cfg: Настройки выборки
        slack: Допуск численной погрешности
        solver: Настройки поиска m(lambda)

    Returns:
        BoundReport: Отчет о проверке

    Raises:
        PreconditionError: Если det f'(0) отличается от lambda более чем на 1e-9
    """
    _check_normalization(f, params)
    lower_domain, upper_domain = admissible_radii(params, solver)
    n = f.n

    ray = np.linspace(0.0, 1.0, cfg.radial_grid + 1)
    lower_points = np.concatenate([
        ball_points(cfg.seed, "distortion-lower", cfg.sphere_samples, n, lower_domain),
        _first_axis(lower_domain * ray, n),
    ])
    lower_abs = np.minimum(np.linalg.norm(lower_points, axis=1), lower_domain)
    lower_margins = (
        f.det_jacobian_batch(lower_points).real
        - distortion_envelopes(lower_abs, params, "lower", solver)
    )
    reports = [BoundReport.from_margins(lower_margins, lower_points, slack)]
    ray_margins = [lower_margins[-ray.size:]]

    upper_checked = upper_domain > 0
    if upper_checked:
        upper_points = np.concatenate([
            ball_points(cfg.seed, "distortion-upper", cfg.sphere_samples, n, upper_domain),
            _first_axis(-upper_domain * ray, n),
        ])
        upper_abs = np.minimum(np.linalg.norm(upper_points, axis=1), upper_domain)
        upper_margins = (
            distortion_envelopes(upper_abs, params, "upper", solver)
            - np.abs(f.det_jacobian_batch(upper_points))
        )
        reports.append(BoundReport.from_margins(upper_margins, upper_points, slack))
        ray_margins.append(upper_margins[-ray.size:])

    lower_gap = float(np.max(np.abs(ray_margins[0])))
    upper_gap = float(np.max(np.abs(ray_margins[1]))) if upper_checked else None
    report = BoundReport.combine(reports)
    report.sharpness_gap = max(g for g in (lower_gap, upper_gap) if g is not None)
    report.details = {
        "lower_domain": lower_domain,
        "upper_domain": upper_domain,
        "upper_bound_checked": upper_checked,
        "lower_ray_gap": lower_gap,
        "upper_ray_gap": upper_gap,
        "params": params.to_dict(),
    }
    report.notes = [ONE_SIDED_NOTE]
    if not upper_checked:
        report.notes.append("Верхняя оценка: допустимый радиус равен 0, проверена только нижняя")
    logger.info(
        "Проверка искажения %r: точек %d, нарушений %d, худший запас %.3e",
        params, report.samples_tested, report.violations, report.worst_margin,
    )
    return report


def subordination_trace(
    f: HolomorphicMap,
    zeta: Sequence[complex],
    a: float,
    params: BlochClassParams,
    u: complex,
) -> complex:
    """След T(u) = (1 - a u)^(alpha(n+1)) det f'(zeta u).

    Степень берется по главной ветви: Re(1 - a u) > 0 при a < 1, |u| < 1.

    Args:
        f: Отображение
        zeta: Единичный вектор C^n
        a: Параметр a из (0, 1), обычно m(lambda)
        params: Параметры класса
        u: Точка единичного круга

    Returns:
        complex: T(u); T(0) = det f'(0)

    Raises:
        DomainError: Если |u| >= 1, |zeta| != 1 или a вне (0, 1)
    """
    u = as_complex_scalar(u, "u")
    if abs(u) >= 1:
        raise DomainError("Точка u должна лежать в единичном круге", limit=1.0)
    direction = np.asarray(zeta, dtype=np.complex128).reshape(-1)
    if abs(np.linalg.norm(direction) - 1) > 1e-12:
        raise DomainError("Вектор zeta должен быть единичным")
    validate_radius(a, "a", 1.0, inclusive=False)
    det = complex(f.det_jacobian_batch((direction * u).reshape(1, -1))[0])
    return principal_power_scalar(1 - a * u, params.beta) * det


def verify_subordination(
    f: HolomorphicMap,
    params: BlochClassParams,
    cfg: SamplingConfig = SamplingConfig(),
    slack: float = DEFAULT_SLACK,
    solver: RootSolverConfig = RootSolverConfig(),
) -> BoundReport:
    """Численная проверка включения T(D_h(a, arctanh a0)) в круг радиуса r0.

    Точки u берутся равномерно в евклидовом круге, реализующем
    гиперболический круг, и на его границе (cfg.radial_grid точек);
    направления zeta - равномерно на сфере. Проверяется |T(u)| <= r0.

    Raises:
        PreconditionError: Если det f'(0) отличается от lambda более чем на 1e-9
    """
    _check_normalization(f, params)
    a = m_of_lambda(params, solver)
    hyperbolic_radius = math.atanh(a0(params))
    center, radius = hyperbolic_disk_euclidean(a, hyperbolic_radius)
    bound = subordination_radius(params, solver)

    count = cfg.sphere_samples
    polar = uniform_block(cfg.seed, "subordination-disk", count, 2)
    interior = center + radius * np.sqrt(polar[:, 0]) * np.exp(2j * np.pi * polar[:, 1])
    boundary = hyperbolic_circle_points(a, hyperbolic_radius, cfg.radial_grid)
    u = np.concatenate([interior, boundary])

    directions = sphere_points(cfg.seed, "subordination-direction", u.size, f.n)
    # Граничные точки идут вдоль e1: для экстремального отображения там |T| = r0
    directions[-boundary.size:] = _first_axis(np.ones(boundary.size), f.n)
    dets = f.det_jacobian_batch(directions * u[:, None])
    traces = principal_power(1 - a * u, params.beta) * dets
    margins = bound - np.abs(traces)

    report = BoundReport.from_margins(margins, directions * u[:, None], slack)
    report.details = {"a": a, "r0": bound, "disk_center": center.real, "disk_radius": radius}
    report.notes = [ONE_SIDED_NOTE]
    return report


def verify_injectivity_sample(
    f: HolomorphicMap, radius: float, cfg: SamplingConfig = SamplingConfig()
) -> BoundReport:
    """Выборочная проверка однолистности в шаре B^n(0, radius).

    Однолистность численно не сертифицируется: ищутся только грубые
    нарушения. Половина пар - независимые точки шара, остальные - пары
    (z, omega z) с omega из {-1, e^(2 pi i/3), i}. Нарушение - пара с
    |z' - z''| > 1e-6 и |f(z') - f(z'')| < 1e-12.

    Args:
        f: Отображение
        radius: Радиус шара, 0 < radius < 1
        cfg: Настройки выборки (используется pair_samples)

    Returns:
        BoundReport: Запас |f(z') - f(z'')| - 1e-12 по парам
    """
    if not 0 < radius < 1:
        raise DomainError("Радиус должен лежать в (0, 1)", limit=1.0)
    n = f.n
    total = cfg.pair_samples
    independent = (total + 1) // 2
    rotated = total - independent

    first = ball_points(cfg.seed, "injectivity-first", independent, n, radius)
    second = ball_points(cfg.seed, "injectivity-second", independent, n, radius)
    if rotated:
        base = ball_points(cfg.seed, "injectivity-rotation", rotated, n, radius)
        omegas = np.array([ROTATIONS[k % len(ROTATIONS)] for k in range(rotated)])
        first = np.concatenate([first, base])
        second = np.concatenate([second, omegas[:, None] * base])

    domain_gap = np.linalg.norm(first - second, axis=1)
    eligible = domain_gap > INJECTIVITY_DOMAIN_GAP
    images = f.evaluate_batch(np.concatenate([first[eligible], second[eligible]]))
    half = images.shape[0] // 2
    image_gap = np.linalg.norm(images[:half] - images[half:], axis=1)
    margins = image_gap - INJECTIVITY_IMAGE_GAP

    report = BoundReport.from_margins(margins, first[eligible], slack=0.0)
    report.details = {"radius": radius, "pairs": total, "eligible_pairs": int(eligible.sum())}
    report.notes = ["Выборочная проверка: обнаруживает только грубые нарушения однолистности"]
    return report
