"""
Отчет о проверке оценки

Результат проверки неравенства на выборке точек: число проверенных
точек, число нарушений, наихудший запас и точка, где он достигнут.
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Optional

import numpy as np

ONE_SIDED_NOTE = (
    "Гипотезы о нормах проверяются по оценкам супремума снизу; "
    "отсутствие нарушений не является сертификатом"
)


def encode_point(point: Optional[Iterable[complex]]) -> Optional[List[List[float]]]:
    """Точка C^n как список пар [re, im]"""
    if point is None:
        return None
    return [[float(c.real), float(c.imag)] for c in np.asarray(point, dtype=np.complex128)]


@dataclass
class BoundReport:
    """Результат проверки оценки на выборке.

    Атрибуты:
        samples_tested (int): Число проверенных точек
        violations (int): Число точек с запасом меньше -slack
        worst_margin (float): Минимальный запас (отрицательный - нарушение)
        worst_point (list | None): Точка наихудшего запаса, пары [re, im]
        slack (float): Допуск численной погрешности
        sharpness_gap (float | None): Наибольший |запас| на луче, где
                                      оценка обращается в равенство
        details (dict): Дополнительные сведения о проверке
        notes (list): Пояснения к интерпретации
    """

    samples_tested: int
    violations: int
    worst_margin: float
    worst_point: Optional[List[List[float]]]
    slack: float
    sharpness_gap: Optional[float] = None
    details: dict = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @classmethod
    def from_margins(
        cls,
        margins: np.ndarray,
        points: np.ndarray,
        slack: float,
        **kwargs,
    ) -> "BoundReport":
        """Собирает отчет из массива запасов и соответствующих точек"""
        margins = np.asarray(margins, dtype=float)
        if not margins.size:
            return cls(0, 0, 0.0, None, slack, **kwargs)
        worst = int(np.argmin(margins))
        return cls(
            samples_tested=int(margins.size),
            violations=int(np.count_nonzero(margins < -slack)),
            worst_margin=float(margins[worst]),
            worst_point=encode_point(points[worst]),
            slack=slack,
            **kwargs,
        )

    @classmethod
    def combine(cls, reports: List["BoundReport"]) -> "BoundReport":
        """Объединяет отчеты: суммы счетчиков, минимум запаса, максимум зазора"""
        if not reports:
            raise ValueError("Нет отчетов для объединения")
        worst = min(reports, key=lambda r: r.worst_margin + r.slack)
        gaps = [r.sharpness_gap for r in reports if r.sharpness_gap is not None]
        notes = []
        for report in reports:
            notes.extend(n for n in report.notes if n not in notes)
        return cls(
            samples_tested=sum(r.samples_tested for r in reports),
            violations=sum(r.violations for r in reports),
            worst_margin=worst.worst_margin,
            worst_point=worst.worst_point,
            slack=worst.slack,
            sharpness_gap=max(gaps) if gaps else None,
            details={"cases": len(reports)},
            notes=notes,
        )

    @property
    def passed(self) -> bool:
        """True, если нарушений нет"""
        return self.violations == 0

    def to_dict(self) -> dict:
        """Словарь для JSON-вывода"""
        return {
            "samples_tested": self.samples_tested,
            "violations": self.violations,
            "worst_margin": self.worst_margin,
            "worst_point": self.worst_point,
            "slack": self.slack,
            "sharpness_gap": self.sharpness_gap,
            "details": self.details,
            "notes": self.notes,
        }
