"""
Специальные функции класса Блоха

Функция phi, ее максимум a0, обратная функция m(lambda)
и производные от них величины: радиус круга, на который
отображение G_lambda переводит гиперболический круг,
и оценка модуля следа T на гиперболической окружности.
"""

import functools
import logging
import math
import sys

from bloch_lab.constants.params import BlochClassParams, RootSolverConfig
from bloch_lab.utils import DomainError, SolverError, validate_closed_interval

logger = logging.getLogger(__name__)


def _phi_constant(beta: float) -> float:
    """Множитель sqrt(beta + 1) * ((beta + 1) / beta)^(beta / 2)"""
    return math.sqrt(beta + 1) * ((beta + 1) / beta) ** (beta / 2)


def _phi(x: float, beta: float) -> float:
    # (1 - x^2)^(beta/2) * ((beta+1)/beta)^(beta/2) одной степенью
    return x * math.sqrt(beta + 1) * ((1 - x * x) * (beta + 1) / beta) ** (beta / 2)


def _phi_derivative(x: float, beta: float) -> float:
    if x == 1.0 and beta < 2:
        return -math.inf
    return (
        _phi_constant(beta)
        * (1 - x * x) ** (beta / 2 - 1)
        * (1 - (beta + 1) * x * x)
    )


def a0(params: BlochClassParams) -> float:
    """Точка максимума phi: a0 = 1 / sqrt(alpha(n + 1) + 1).

    Args:
        params: Параметры класса

    Returns:
        float: a0 из интервала (0, 1)
    """
    return 1.0 / math.sqrt(params.beta + 1)


def phi(x: float, params: BlochClassParams) -> float:
    """Функция phi(x) = x (1 - x^2)^(beta/2) sqrt(beta + 1) ((beta + 1)/beta)^(beta/2).

    Возрастает на [0, a0], убывает на [a0, 1], phi(a0) = 1.

    Args:
        x: Точка отрезка [0, 1]
        params: Параметры класса

    Returns:
        float: Значение из [0, 1]

    Raises:
        DomainError: Если x вне [0, 1]
    """
    validate_closed_interval(x, "x", 0.0, 1.0)
    return _phi(float(x), params.beta)


def phi_derivative(x: float, params: BlochClassParams) -> float:
    """Производная phi'(x) = C (1 - x^2)^(beta/2 - 1) (1 - (beta + 1) x^2)

    Raises:
        DomainError: Если x вне [0, 1]
    """
    validate_closed_interval(x, "x", 0.0, 1.0)
    return _phi_derivative(float(x), params.beta)


@functools.lru_cache(maxsize=4096)
def _solve_m(beta: float, lam: float, tolerance: float, max_iterations: int) -> float:
    """Корень phi(x) = lam на [0, a0] гибридом бисекции и Ньютона.

    Старт x = lam / phi'(0): phi(x) <= phi'(0) x, поэтому старт лежит
    не правее корня и служит левым концом отрезка. Остановка по
    относительному шагу.
    """
    root_max = 1.0 / math.sqrt(beta + 1)
    if lam == 1.0:
        return root_max

    lo, hi = min(lam / _phi_constant(beta), root_max), root_max
    x = lo
    for iteration in range(max_iterations):
        fx = _phi(x, beta) - lam
        if fx == 0.0:
            return x
        # phi возрастает на [0, a0]: знак fx указывает сторону корня
        if fx < 0:
            lo = x
        else:
            hi = x

        slope = _phi_derivative(x, beta)
        newton = x - fx / slope if slope > 0 else math.nan
        if lo <= newton <= hi:
            x_next = newton
        else:
            x_next = 0.5 * (lo + hi)

        if abs(x_next - x) <= tolerance * x_next or hi - lo <= tolerance * hi:
            logger.debug(
                "m(lambda=%r) найден за %d итераций: %r", lam, iteration + 1, x_next
            )
            return x_next
        x = x_next

    raise SolverError(
        f"Корень phi(x) = {lam!r} не найден за {max_iterations} итераций",
        bracket=(lo, hi),
    )


def m_of_lambda(
    params: BlochClassParams, cfg: RootSolverConfig = RootSolverConfig()
) -> float:
    """Единственный корень уравнения phi(x) = lambda на [0, a0].

    Для lambda = 1 возвращает a0 без итераций: там phi'(a0) = 0
    и метод Ньютона неприменим.

    Args:
        params: Параметры класса (используются alpha, n, lambda)
        cfg: Настройки поиска корня

    Returns:
        float: m(lambda) из (0, a0]

    Raises:
        SolverError: Если метод не сошелся за cfg.max_iterations итераций
        DomainError: Если корень меньше наименьшего нормального числа float
    """
    # m(lambda) >= lambda / phi'(0)
    if params.lam / _phi_constant(params.beta) < sys.float_info.min:
        raise DomainError(
            f"m(lambda) для lambda = {params.lam!r} непредставимо в float",
            limit=sys.float_info.min,
        )
    return _solve_m(params.beta, params.lam, cfg.tolerance, cfg.max_iterations)


def subordination_radius(
    params: BlochClassParams, cfg: RootSolverConfig = RootSolverConfig()
) -> float:
    """Радиус r0 = lambda a0 / m(lambda) круга G_lambda(D_h(m, arctanh a0))"""
    return params.lam * a0(params) / m_of_lambda(params, cfg)


def trace_modulus_bound(a: float, params: BlochClassParams) -> float:
    """Оценка |T(u)| на гиперболической окружности S_h(a, arctanh a0).

    (1 - a^2)^(beta/2) ((beta + 1)/beta)^(beta/2); при a = m(lambda)
    совпадает с lambda / (a sqrt(beta + 1)).

    Raises:
        DomainError: Если a вне [0, 1]
    """
    validate_closed_interval(a, "a", 0.0, 1.0)
    beta = params.beta
    return ((1 - a * a) * (beta + 1) / beta) ** (beta / 2)
