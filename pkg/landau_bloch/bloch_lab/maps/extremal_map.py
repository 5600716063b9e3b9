"""
Экстремальное отображение теоремы искажения

Первая компонента - интеграл от 0 до z_1 функции
lambda (a - xi) / (a (1 - a xi)^(alpha(n+1)+1)), a = m(lambda),
остальные компоненты тождественны. На этом отображении обе оценки
теоремы искажения достигаются.
"""

import logging

from bloch_lab.bounds import integrate_unit_parameter
from bloch_lab.constants import (
    BlochClassParams,
    RootSolverConfig,
    m_of_lambda,
    principal_power,
)
from bloch_lab.maps.base_map import HolomorphicMap
import numpy as np

logger = logging.getLogger(__name__)


class ExtremalMap(HolomorphicMap):
    """Экстремальное отображение для параметров класса Блоха.

    Атрибуты:
        map_type (str): Тип отображения ('extremal')
        params (BlochClassParams): Параметры класса
        a (float): m(lambda), вычисляется один раз
        quadrature_tolerance (float): Допуск квадратуры первой компоненты
    """

    __slots__ = ("_params", "_a")

    map_type = "extremal"
    quadrature_tolerance = 1e-12

    def __init__(
        self, params: BlochClassParams, solver: RootSolverConfig = RootSolverConfig()
    ):
        super().__init__(params.n)
        self._params = params
        self._a = m_of_lambda(params, solver)

    @property
    def params(self) -> BlochClassParams:
        """Параметры класса"""
        return self._params

    @property
    def a(self) -> float:
        """a = m(lambda)"""
        return self._a

    def first_derivative(self, xi: np.ndarray) -> np.ndarray:
        """Производная первой компоненты: lambda (a - xi) / (a (1 - a xi)^(beta + 1))"""
        xi = np.asarray(xi, dtype=np.complex128)
        a, lam = self._a, self._params.lam
        # Re(1 - a xi) > 0 при |xi| <= 1 и a < 1: главная ветвь однозначна
        return lam * (a - xi) / (a * principal_power(1 - a * xi, self._params.beta + 1))

    def evaluate_batch(self, points: np.ndarray) -> np.ndarray:
        batch = self.prepare_batch(points)
        values = batch.copy()
        if not batch.shape[0]:
            return values
        z1 = batch[:, 0]
        # Интеграл вдоль отрезка [0, z1]: xi = s z1, d xi = z1 ds
        values[:, 0] = integrate_unit_parameter(
            lambda s: self.first_derivative(s * z1) * z1,
            abs_tolerance=self.quadrature_tolerance,
        )
        return values

    def jacobian_batch(self, points: np.ndarray) -> np.ndarray:
        batch = self.prepare_batch(points)
        result = np.zeros((batch.shape[0], self.n, self.n), dtype=np.complex128)
        result[:, np.arange(self.n), np.arange(self.n)] = 1.0
        result[:, 0, 0] = self.first_derivative(batch[:, 0])
        return result

    def det_jacobian_batch(self, points: np.ndarray) -> np.ndarray:
        batch = self.prepare_batch(points)
        return self.first_derivative(batch[:, 0])

    def get_map_info(self) -> dict:
        info = super().get_map_info()
        info.update(self._params.to_dict())
        info["a"] = self._a
        return info
