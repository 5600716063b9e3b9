"""
Полиномиальное отображение

Отображение B^n -> C^n, каждая компонента которого задана
набором одночленов (коэффициент, вектор показателей).
Матрица Якоби вычисляется почленным дифференцированием.
"""

from typing import List, Sequence, Tuple

from bloch_lab.linalg import as_complex_scalar
from bloch_lab.maps.base_map import HolomorphicMap
import numpy as np

Term = Tuple[complex, Sequence[int]]


class PolyMap(HolomorphicMap):
    """Полиномиальное отображение с комплексными коэффициентами.

    Атрибуты:
        map_type (str): Тип отображения ('poly')
        max_degree (int): Ограничение на полную степень одночлена
        degree (int): Наибольшая полная степень одночлена
    """

    __slots__ = ("_coefficients", "_exponents")

    map_type = "poly"
    max_degree = 32

    def __init__(self, n: int, components: Sequence[Sequence[Term]]):
        """
        Создание полиномиального отображения

        Args:
            n: Размерность
            components: n списков одночленов (coefficient, exponents)

        Raises:
            ValueError: При неверном числе компонент, длине показателей,
                        отрицательных показателях, бесконечных коэффициентах
                        или превышении max_degree
        """
        super().__init__(n)
        if len(components) != n:
            raise ValueError(f"Отображение должно иметь {n} компонент")

        self._coefficients: List[np.ndarray] = []
        self._exponents: List[np.ndarray] = []
        for index, terms in enumerate(components):
            coefficients = np.array(
                [as_complex_scalar(c, f"коэффициент компоненты {index}") for c, _ in terms],
                dtype=np.complex128,
            )
            exponents = np.zeros((len(terms), n), dtype=np.int64)
            for row, (_, exps) in enumerate(terms):
                exps = list(exps)
                if len(exps) != n:
                    raise ValueError(f"Вектор показателей должен иметь длину {n}")
                if any(isinstance(e, bool) or int(e) != e or e < 0 for e in exps):
                    raise ValueError("Показатели должны быть неотрицательными целыми")
                exponents[row] = exps
            if exponents.size and exponents.sum(axis=1).max() > self.max_degree:
                raise ValueError(
                    f"Полная степень одночлена превышает {self.max_degree}"
                )
            self._coefficients.append(coefficients)
            self._exponents.append(exponents)

    @classmethod
    def identity(cls, n: int) -> "PolyMap":
        """Тождественное отображение z -> z"""
        return cls(n, [[(1.0, tuple(int(i == j) for i in range(n)))] for j in range(n)])

    @classmethod
    def constant(cls, values: Sequence[complex]) -> "PolyMap":
        """Постоянное отображение z -> values"""
        n = len(values)
        return cls(n, [[(v, (0,) * n)] for v in values])

    @property
    def degree(self) -> int:
        """Наибольшая полная степень одночлена"""
        degrees = [int(e.sum(axis=1).max()) for e in self._exponents if e.size]
        return max(degrees, default=0)

    def terms(self) -> List[List[Term]]:
        """Одночлены по компонентам"""
        return [
            [(complex(c), tuple(int(v) for v in e)) for c, e in zip(coefs, exps)]
            for coefs, exps in zip(self._coefficients, self._exponents)
        ]

    @staticmethod
    def _monomials(batch: np.ndarray, exponents: np.ndarray) -> np.ndarray:
        # (N, T): произведение z_j^e_j по координатам
        return np.prod(batch[:, None, :] ** exponents[None, :, :], axis=2)

    def evaluate_batch(self, points: np.ndarray) -> np.ndarray:
        batch = self.prepare_batch(points)
        values = np.zeros(batch.shape, dtype=np.complex128)
        for i, (coefs, exps) in enumerate(zip(self._coefficients, self._exponents)):
            if coefs.size:
                values[:, i] = self._monomials(batch, exps) @ coefs
        return values

    def jacobian_batch(self, points: np.ndarray) -> np.ndarray:
        batch = self.prepare_batch(points)
        count = batch.shape[0]
        result = np.zeros((count, self.n, self.n), dtype=np.complex128)
        for i, (coefs, exps) in enumerate(zip(self._coefficients, self._exponents)):
            if not coefs.size:
                continue
            for j in range(self.n):
                factors = coefs * exps[:, j]
                if not np.any(factors):
                    continue
                lowered = exps.copy()
                lowered[:, j] = np.maximum(lowered[:, j] - 1, 0)
                result[:, i, j] = self._monomials(batch, lowered) @ factors
        return result

    def scaled(self, factor: complex, first_rotation: complex = 1.0) -> "PolyMap":
        """Отображение factor * U f, где U = diag(first_rotation, 1, ..., 1)"""
        components = []
        for index, terms in enumerate(self.terms()):
            multiplier = factor * (first_rotation if index == 0 else 1.0)
            components.append([(c * multiplier, e) for c, e in terms])
        return PolyMap(self.n, components)

    def to_dict(self) -> dict:
        """Представление в формате JSON {"n": ..., "components": [...]}"""
        return {
            "n": self.n,
            "components": [
                [{"re": c.real, "im": c.imag, "exp": list(e)} for c, e in terms]
                for terms in self.terms()
            ],
        }

    def get_map_info(self) -> dict:
        info = super().get_map_info()
        info["degree"] = self.degree
        info["terms"] = int(sum(c.size for c in self._coefficients))
        return info
