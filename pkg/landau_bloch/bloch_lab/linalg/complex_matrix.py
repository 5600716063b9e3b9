"""
Комплексная матрица

Неизменяемая квадратная комплексная матрица.
Используется для хранения матрицы Якоби f'(z), строка i и столбец j
которой содержат производную df_i/dz_j.
"""

from typing import Iterable, Sequence

from bloch_lab.utils import validate_finite, validate_positive_int
import numpy as np


def as_complex_scalar(value: complex, name: str = "value") -> complex:
    """Приводит число к complex и проверяет конечность компонент.

    Args:
        value: Вещественное или комплексное число
        name: Имя параметра для сообщения об ошибке

    Returns:
        complex: Проверенное комплексное число
    """
    scalar = complex(value)
    validate_finite(scalar, name)
    return scalar


class ComplexMatrix:
    """Квадратная комплексная матрица n x n.

    Атрибуты:
        n (int): Размерность
        entries (np.ndarray): Элементы матрицы (только для чтения)
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[Sequence[complex]]):
        """
        Создание матрицы

        Args:
            entries: Квадратная таблица элементов (вложенные списки или ndarray)

        Raises:
            ValueError: Если матрица не квадратная, пустая или
                        содержит NaN/Inf
        """
        array = np.array(entries, dtype=np.complex128)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise ValueError("Матрица должна быть квадратной")
        validate_positive_int(array.shape[0], "n")
        if not np.all(np.isfinite(array)):
            raise ValueError("Элементы матрицы должны быть конечными")
        array.flags.writeable = False
        object.__setattr__(self, "_entries", array)

    def __setattr__(self, name, value) -> None:
        raise AttributeError("Матрица неизменяема после создания")

    @classmethod
    def identity(cls, n: int) -> "ComplexMatrix":
        """Единичная матрица размерности n"""
        validate_positive_int(n, "n")
        return cls(np.eye(n))

    @classmethod
    def diagonal(cls, *values: complex) -> "ComplexMatrix":
        """Диагональная матрица с заданными элементами"""
        return cls(np.diag(np.asarray(values, dtype=np.complex128)))

    @property
    def n(self) -> int:
        """Размерность матрицы"""
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """Элементы матрицы (массив только для чтения)"""
        return self._entries

    def to_numpy(self) -> np.ndarray:
        """Изменяемая копия элементов"""
        return self._entries.copy()

    def conjugate_transpose(self) -> "ComplexMatrix":
        """Эрмитово сопряженная матрица"""
        return ComplexMatrix(self._entries.conj().T)

    def apply(self, vector: Sequence[complex]) -> np.ndarray:
        """Произведение матрицы на вектор"""
        vec = np.asarray(vector, dtype=np.complex128)
        if vec.shape != (self.n,):
            raise ValueError(f"Ожидается вектор длины {self.n}")
        return self._entries @ vec

    def __matmul__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("Размерности матриц не совпадают")
        return ComplexMatrix(self._entries @ other.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        return bool(np.array_equal(self._entries, other.entries))

    def __hash__(self) -> int:
        return hash(self._entries.tobytes())

    def __repr__(self) -> str:
        return f"ComplexMatrix(n={self.n}, entries={self._entries.tolist()!r})"
