"""
Константа Ландау-Блоха для пространств Харди

Цепочка величин для отображений из H^p: рост M0(r), функция W1
и ее минимум m, радиусы однолистности rho0(r), rho1(r), их максимум
в точке r0, радиус R0 однолистного шара и итоговый радиус R.

Итоговый радиус вычисляется двумя способами: R_derived = r0 R0 по цепочке
вывода и R_paper по опубликованной замкнутой формуле. Их отношение
равно r0^(-(2n-1)); авторитетным считается R_derived.
"""

import math
import sys
from dataclasses import asdict, dataclass
from typing import Tuple, Union

from bloch_lab.utils import (
    DomainError,
    ParameterRegimeError,
    validate_positive,
    validate_positive_int,
    validate_radius,
)
import numpy as np

ArrayLike = Union[float, np.ndarray]


class HardyClassParams:
    """Параметры класса отображений из пространства Харди.

    Атрибуты:
        p (float): Показатель Харди, p > 0
        n (int): Размерность
        K0 (float): Оценка нормы ||f||_p
        lambda0 (float): |det f'(0)|, 0 < lambda0 <= K0
    """

    __slots__ = ("_p", "_n", "_K0", "_lambda0")

    def __init__(self, p: float, n: int, K0: float, lambda0: float):  # noqa: N803
        self.p = p
        self.n = n
        validate_positive(K0, "K0")
        validate_positive(lambda0, "lambda0")
        if K0 < lambda0:
            raise ValueError("Должно выполняться K0 >= lambda0")
        self._K0 = float(K0)
        self._lambda0 = float(lambda0)

    @property
    def p(self) -> float:
        """Показатель Харди p"""
        return self._p

    @p.setter
    def p(self, value: float) -> None:
        if getattr(self, "_p", None) is not None:
            raise AttributeError("Изменение параметра p невозможно")
        validate_positive(value, "p")
        self._p = float(value)

    @property
    def n(self) -> int:
        """Размерность n"""
        return self._n

    @n.setter
    def n(self, value: int) -> None:
        if getattr(self, "_n", None) is not None:
            raise AttributeError("Изменение параметра n невозможно")
        validate_positive_int(value, "n")
        self._n = value

    @property
    def K0(self) -> float:  # noqa: N802
        """Оценка нормы ||f||_p"""
        return self._K0

    @property
    def lambda0(self) -> float:
        """|det f'(0)|"""
        return self._lambda0

    def to_dict(self) -> dict:
        """Словарь параметров для отчетов"""
        return {"p": self._p, "n": self._n, "K0": self._K0, "lambda0": self._lambda0}

    def __repr__(self) -> str:
        return (
            f"HardyClassParams(p={self._p!r}, n={self._n!r}, "
            f"K0={self._K0!r}, lambda0={self._lambda0!r})"
        )


@dataclass(frozen=True)
class HardyLandauResult:
    """Полная цепочка констант для пространства Харди.

    Атрибуты:
        r1 (float): Точка минимума W1
        m_const (float): Минимум W1
        r0 (float): Точка максимума rho1
        M0_at_r0 (float): M0(r0)
        rho0_at_r0 (float): rho0(r0)
        rho1_at_r0 (float): Радиус однолистности rho1(r0)
        R0 (float): Радиус однолистного шара для F(z) = f(r0 z)/r0
        R_derived (float): r0 * R0
        R_paper (float): Опубликованная замкнутая формула для R
    """

    r1: float
    m_const: float
    r0: float
    M0_at_r0: float  # noqa: N815
    rho0_at_r0: float
    rho1_at_r0: float
    R0: float  # noqa: N815
    R_derived: float  # noqa: N815
    R_paper: float  # noqa: N815

    @property
    def R_ratio(self) -> float:  # noqa: N802
        """R_paper / R_derived, теоретически r0^(-(2n-1))"""
        return self.R_paper / self.R_derived

    def to_dict(self) -> dict:
        """Словарь полей вместе с отношением радиусов"""
        record = asdict(self)
        record["R_ratio"] = self.R_ratio
        return record


def _check_open_unit(r: ArrayLike, name: str = "r") -> np.ndarray:
    values = np.asarray(r, dtype=float)
    if not np.all(np.isfinite(values)) or np.any(values <= 0) or np.any(values >= 1):
        raise DomainError(f"Параметр {name} должен лежать в (0, 1)", limit=1.0)
    return values


def _scalar_or_array(values: np.ndarray) -> ArrayLike:
    return float(values) if values.ndim == 0 else values


def hardy_growth_M0(r: ArrayLike, params: HardyClassParams) -> ArrayLike:  # noqa: N802
    """Рост M0(r) = K0 / (r (1 - r^2)^(n/p)).

    Raises:
        DomainError: Если r вне (0, 1)
    """
    values = _check_open_unit(r)
    growth = params.K0 / (values * (1 - values**2) ** (params.n / params.p))
    return _scalar_or_array(growth)


def w1(r: ArrayLike) -> ArrayLike:
    """W1(r) = (2 - r^2) / (r (1 - r^2))

    Raises:
        DomainError: Если r вне (0, 1)
    """
    values = _check_open_unit(r)
    return _scalar_or_array((2 - values**2) / (values * (1 - values**2)))


def w1_minimize() -> Tuple[float, float]:
    """Точка минимума W1 на (0, 1) и значение минимума.

    Returns:
        tuple: (r1, m) = (sqrt((5 - sqrt 17)/2), sqrt 2 (7 + sqrt 17)/(4 sqrt(5 - sqrt 17)))
    """
    sqrt17 = math.sqrt(17.0)
    r1 = math.sqrt((5 - sqrt17) / 2)
    m_const = math.sqrt(2.0) * (7 + sqrt17) / (4 * math.sqrt(5 - sqrt17))
    return r1, m_const


def hardy_rho0(r: ArrayLike, params: HardyClassParams) -> ArrayLike:
    """Радиус однолистности rho0(r) = lambda0 / (m M0(r)^n) для F(z) = f(rz)/r"""
    _, m_const = w1_minimize()
    growth = np.asarray(hardy_growth_M0(r, params))
    return _scalar_or_array(params.lambda0 / (m_const * growth**params.n))


def hardy_rho1(r: ArrayLike, params: HardyClassParams) -> ArrayLike:
    """Радиус однолистности rho1(r) = r rho0(r) для самого f"""
    values = _check_open_unit(r)
    return _scalar_or_array(values * np.asarray(hardy_rho0(values, params)))


def hardy_derivative_oscillation_bound(
    r: float, z_abs: float, params: HardyClassParams
) -> float:
    """Оценка |F'(z) - F'(0)| <= M0(r) (2 - |z|^2) / (1 - |z|^2)

    Raises:
        DomainError: Если r вне (0, 1) или z_abs >= 1
    """
    validate_radius(z_abs, "z_abs", 1.0, inclusive=False)
    return hardy_growth_M0(r, params) * (2 - z_abs**2) / (1 - z_abs**2)


def _from_log(log_value: float, name: str) -> float:
    """exp(log_value) с отказом, если результат не помещается в нормальные float"""
    if not math.log(sys.float_info.min) <= log_value <= math.log(sys.float_info.max):
        raise ParameterRegimeError(
            f"Величина {name} = exp({log_value!r}) непредставима в float"
        )
    return math.exp(log_value)


def hardy_landau(params: HardyClassParams) -> HardyLandauResult:
    """Цепочка констант Ландау-Блоха для пространства Харди.

    Степени M0(r0)^n и K0^(2n-1) вычисляются через логарифмы.

    Args:
        params: Параметры класса Харди

    Returns:
        HardyLandauResult: Все величины цепочки, включая R_derived и R_paper

    Raises:
        ParameterRegimeError: Если rho0(r0) >= r1, так что рассуждение
                              об однолистности неприменимо, или если
                              величина цепочки непредставима в float
    """
    p, n, k0, lambda0 = params.p, params.n, params.K0, params.lambda0
    r1, m_const = w1_minimize()

    denominator = p * (n + 1) + 2 * n * n
    r0 = math.sqrt(p * (n + 1) / denominator)
    # 1 - r0^2 = 2n^2 / denominator
    log_complement = math.log(2 * n * n / denominator)
    log_growth = math.log(k0) - math.log(r0) - n / p * log_complement
    log_lambda0, log_m = math.log(lambda0), math.log(m_const)

    log_rho0 = log_lambda0 - log_m - n * log_growth
    if log_rho0 >= math.log(r1):
        raise ParameterRegimeError(
            f"rho0(r0) = exp({log_rho0!r}) не меньше r1 = {r1!r}: "
            "условие однолистности не выполнено"
        )
    log_r0_ball = 2 * log_lambda0 - math.log(2) - log_m - (2 * n - 1) * log_growth
    log_r_paper = (
        2 * log_lambda0
        - math.log(2)
        - log_m
        - (2 * n - 1) * math.log(k0)
        + math.log(r0)
        + (2 * n * n - n) / p * log_complement
    )
    rho0 = _from_log(log_rho0, "rho0(r0)")
    r0_ball = _from_log(log_r0_ball, "R0")
    # r0 < 1: произведения не переполняются
    rho1 = r0 * rho0
    r_derived = r0 * r0_ball
    for name, value in (("rho1(r0)", rho1), ("R_derived", r_derived)):
        if value < sys.float_info.min:
            raise ParameterRegimeError(f"Величина {name} = {value!r} непредставима в float")
    r_paper = _from_log(log_r_paper, "R_paper")
    if math.isinf(r_paper / r_derived):
        raise ParameterRegimeError("Отношение R_paper / R_derived непредставимо в float")
    return HardyLandauResult(
        r1=r1,
        m_const=m_const,
        r0=r0,
        M0_at_r0=_from_log(log_growth, "M0(r0)"),
        rho0_at_r0=rho0,
        rho1_at_r0=rho1,
        R0=r0_ball,
        R_derived=r_derived,
        R_paper=r_paper,
    )
