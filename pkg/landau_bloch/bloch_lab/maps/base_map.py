"""
Базовый класс отображения

Абстрактный класс для голоморфных отображений единичного шара B^n в C^n.
Определяет общие методы вычисления значений, матрицы Якоби
и ее определителя для одной точки и для пакета точек.
"""

from typing import Sequence

from bloch_lab.linalg import ComplexMatrix
from bloch_lab.utils import validate_in_unit_ball, validate_positive_int
import numpy as np


class HolomorphicMap:
    """Базовый класс голоморфного отображения B^n -> C^n.

    Наследники реализуют пакетные методы evaluate_batch и jacobian_batch,
    принимающие массив точек формы (N, n). Пакетные методы не проверяют
    принадлежность шару: все отображения библиотеки голоморфны в окрестности
    замкнутого шара, и оценки нормы Харди используют граничный радиус 1.

    Атрибуты:
        n (int): Размерность области определения и образа
        map_type (str): Тип отображения
    """

    __slots__ = ("_n",)

    map_type = "holomorphic"

    def __init__(self, n: int):
        """
        Создание отображения

        Args:
            n: Размерность пространства
        """
        self._n = None
        self.n = n  # Проверка в setter

    @property
    def n(self) -> int:
        """Размерность пространства"""
        return self._n

    @n.setter
    def n(self, value: int) -> None:
        """Устанавливает размерность.

        Raises:
            AttributeError: При попытке изменить размерность
            ValueError: При некорректной размерности
        """
        if self._n is not None:
            raise AttributeError("Изменение размерности отображения невозможно")
        validate_positive_int(value, "n")
        self._n = value

    def prepare_point(self, z: Sequence[complex]) -> np.ndarray:
        """Проверяет одну точку открытого единичного шара.

        Returns:
            np.ndarray: Точка как комплексный вектор длины n

        Raises:
            ValueError: При неверной длине или бесконечных координатах
            DomainError: Если |z| >= 1
        """
        point = np.asarray(z, dtype=np.complex128).reshape(-1)
        if point.shape != (self.n,):
            raise ValueError(f"Ожидается точка из C^{self.n}")
        validate_in_unit_ball(float(np.linalg.norm(point)))
        return point

    def prepare_batch(self, points: np.ndarray) -> np.ndarray:
        """Приводит пакет точек к массиву формы (N, n)"""
        batch = np.asarray(points, dtype=np.complex128)
        if batch.ndim == 1:
            batch = batch.reshape(1, -1)
        if batch.ndim != 2 or batch.shape[1] != self.n:
            raise ValueError(f"Ожидается массив точек формы (N, {self.n})")
        return batch

    def evaluate_batch(self, points: np.ndarray) -> np.ndarray:
        """Значения отображения в пакете точек, форма (N, n)"""
        raise NotImplementedError

    def jacobian_batch(self, points: np.ndarray) -> np.ndarray:
        """Матрицы Якоби в пакете точек, форма (N, n, n)"""
        raise NotImplementedError

    def det_jacobian_batch(self, points: np.ndarray) -> np.ndarray:
        """Определители матриц Якоби в пакете точек, форма (N,)"""
        return np.linalg.det(self.jacobian_batch(points))

    def evaluate(self, z: Sequence[complex]) -> np.ndarray:
        """Значение отображения в точке открытого шара"""
        point = self.prepare_point(z)
        return self.evaluate_batch(point.reshape(1, -1))[0]

    def jacobian(self, z: Sequence[complex]) -> ComplexMatrix:
        """Матрица Якоби f'(z) в точке открытого шара"""
        point = self.prepare_point(z)
        return ComplexMatrix(self.jacobian_batch(point.reshape(1, -1))[0])

    def det_jacobian(self, z: Sequence[complex]) -> complex:
        """Определитель det f'(z) в точке открытого шара"""
        point = self.prepare_point(z)
        return complex(self.det_jacobian_batch(point.reshape(1, -1))[0])

    def get_map_info(self) -> dict:
        """Возвращает краткую информацию об отображении"""
        return {"map_type": self.map_type, "n": self.n}


def eval_map(f: HolomorphicMap, z: Sequence[complex]) -> np.ndarray:
    """Значение f(z) для |z| < 1.

    Raises:
        DomainError: Если |z| >= 1
    """
    return f.evaluate(z)


def jacobian(f: HolomorphicMap, z: Sequence[complex]) -> ComplexMatrix:
    """Матрица Якоби f'(z) для |z| < 1 (строка i, столбец j: df_i/dz_j).

    Raises:
        DomainError: Если |z| >= 1
    """
    return f.jacobian(z)
