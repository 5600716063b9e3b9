"""
Параметры класса Блоха

Запись параметров (alpha, n, lambda, K) для теоремы искажения
и теоремы о шлихт-шаре, а также настройки поиска корня.
"""

from dataclasses import dataclass

from bloch_lab.utils import (
    validate_half_open_unit,
    validate_positive,
    validate_positive_int,
)


class BlochClassParams:
    """Параметры класса отображений alpha-Блоха.

    Атрибуты:
        alpha (float): Показатель Блоха, alpha > 0
        n (int): Размерность, n >= 1
        lam (float): lambda = det f'(0), лежит в (0, 1]
        K (float): Оценка полунормы ||f||_alpha, K >= 1
                   (используется только в теореме о шлихт-шаре)
    """

    __slots__ = ("_alpha", "_n", "_lam", "_K")

    def __init__(self, alpha: float, n: int, lam: float, K: float = 1.0):
        """
        Создание записи параметров

        Args:
            alpha: Показатель Блоха
            n: Размерность пространства
            lam: Значение det f'(0)
            K: Оценка полунормы ||f||_alpha
        """
        self.alpha = alpha  # Проверка в setter
        self.n = n  # Проверка в setter
        self.lam = lam  # Проверка в setter
        self.K = K  # Проверка в setter

    @staticmethod
    def _check_unset(instance, slot: str, title: str) -> None:
        if getattr(instance, slot, None) is not None:
            raise AttributeError(f"Изменение параметра {title} невозможно")

    @property
    def alpha(self) -> float:
        """Показатель Блоха alpha"""
        return self._alpha

    @alpha.setter
    def alpha(self, value: float) -> None:
        self._check_unset(self, "_alpha", "alpha")
        validate_positive(value, "alpha")
        self._alpha = float(value)

    @property
    def n(self) -> int:
        """Размерность n"""
        return self._n

    @n.setter
    def n(self, value: int) -> None:
        self._check_unset(self, "_n", "n")
        validate_positive_int(value, "n")
        self._n = value

    @property
    def lam(self) -> float:
        """lambda = det f'(0)"""
        return self._lam

    @lam.setter
    def lam(self, value: float) -> None:
        self._check_unset(self, "_lam", "lambda")
        validate_half_open_unit(value, "lambda")
        self._lam = float(value)

    @property
    def K(self) -> float:  # noqa: N802
        """Оценка полунормы ||f||_alpha"""
        return self._K

    @K.setter
    def K(self, value: float) -> None:  # noqa: N802
        self._check_unset(self, "_K", "K")
        validate_positive(value, "K")
        if value < 1:
            raise ValueError("Параметр K должен быть не меньше 1")
        self._K = float(value)

    @property
    def beta(self) -> float:
        """Показатель alpha * (n + 1), встречающийся во всех формулах"""
        return self._alpha * (self._n + 1)

    def with_lambda(self, lam: float) -> "BlochClassParams":
        """Копия параметров с другим lambda"""
        return BlochClassParams(self._alpha, self._n, lam, self._K)

    def to_dict(self) -> dict:
        """Словарь параметров для отчетов"""
        return {"alpha": self._alpha, "n": self._n, "lambda": self._lam, "K": self._K}

    def __eq__(self, other) -> bool:
        if not isinstance(other, BlochClassParams):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash((self._alpha, self._n, self._lam, self._K))

    def __repr__(self) -> str:
        return (
            f"BlochClassParams(alpha={self._alpha!r}, n={self._n!r}, "
            f"lam={self._lam!r}, K={self._K!r})"
        )


@dataclass(frozen=True)
class RootSolverConfig:
    """Настройки гибридного метода бисекции и Ньютона.

    Атрибуты:
        tolerance (float): Относительный допуск по x
        max_iterations (int): Максимальное число итераций
    """

    tolerance: float = 1e-12
    max_iterations: int = 200

    def __post_init__(self):
        validate_positive(self.tolerance, "tolerance")
        validate_positive_int(self.max_iterations, "max_iterations")
