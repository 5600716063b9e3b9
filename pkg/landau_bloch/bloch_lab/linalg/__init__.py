"""
Пакет линейной алгебры

Содержит комплексные матрицы и операции над ними:
- ComplexMatrix: неизменяемая квадратная комплексная матрица
- operator_norm, determinant, lemma_a_lower_bound: операции
"""

from .complex_matrix import ComplexMatrix, as_complex_scalar
from .matrix_ops import (
    PowerIterationConfig,
    determinant,
    lemma_a_lower_bound,
    operator_norm,
)

__all__ = [
    "ComplexMatrix",
    "PowerIterationConfig",
    "as_complex_scalar",
    "determinant",
    "lemma_a_lower_bound",
    "operator_norm",
]
