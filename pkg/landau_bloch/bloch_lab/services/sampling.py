"""
Детерминированная выборка

Генератор со счетчиком (Philox), ключ которого составлен из зерна,
имени потока и номера блока выборки. Точка с номером i всегда
берется из блока i // BLOCK_SIZE, поэтому результат не зависит
от порядка вычислений и первые N точек совпадают для любого
общего объема выборки.
"""

import zlib
from dataclasses import dataclass

from bloch_lab.utils import validate_positive_int
import numpy as np

BLOCK_SIZE = 1024
_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class SamplingConfig:
    """Настройки выборки для оценок и проверок.

    Атрибуты:
        seed (int): 64-битное зерно
        sphere_samples (int): Число направлений на единичной сфере
        radial_grid (int): Число радиусов в (0, 1)
        pair_samples (int): Число пар точек для проверки однолистности
        refine_steps (int): Число шагов локального подъема (0 - без уточнения)
        refine_starts (int): Подъем начинается от точек, которые при
                             появлении в выборке входят в refine_starts лучших
    """

    seed: int = 0
    sphere_samples: int = 256
    radial_grid: int = 64
    pair_samples: int = 10_000
    refine_steps: int = 200
    refine_starts: int = 4

    def __post_init__(self):
        if isinstance(self.seed, bool) or not isinstance(self.seed, int):
            raise ValueError("Зерно seed должно быть целым числом")
        validate_positive_int(self.sphere_samples, "sphere_samples")
        validate_positive_int(self.radial_grid, "radial_grid")
        validate_positive_int(self.pair_samples, "pair_samples")
        validate_positive_int(self.refine_steps, "refine_steps", minimum=0)
        validate_positive_int(self.refine_starts, "refine_starts")


def block_generator(seed: int, stream: str, block: int) -> np.random.Generator:
    """Генератор блока выборки с ключом (seed, stream, block)"""
    stream_id = zlib.crc32(stream.encode("utf-8"))
    key = ((seed & _MASK64) << 64) | (stream_id << 32) | (block & 0xFFFFFFFF)
    return np.random.Generator(np.random.Philox(key=key))


def gaussian_block(seed: int, stream: str, count: int, width: int) -> np.ndarray:
    """Первые count строк потока стандартных нормальных векторов длины width"""
    blocks = -(-count // BLOCK_SIZE)
    parts = [
        block_generator(seed, stream, b).standard_normal((BLOCK_SIZE, width))
        for b in range(blocks)
    ]
    return np.concatenate(parts, axis=0)[:count]


def uniform_block(seed: int, stream: str, count: int, width: int = 1) -> np.ndarray:
    """Первые count строк потока равномерных на [0, 1) векторов длины width"""
    blocks = -(-count // BLOCK_SIZE)
    parts = [
        block_generator(seed, stream, b).random((BLOCK_SIZE, width))
        for b in range(blocks)
    ]
    return np.concatenate(parts, axis=0)[:count]


def sphere_points(seed: int, stream: str, count: int, n: int) -> np.ndarray:
    """Точки единичной сферы в C^n, равномерные по нормированной мере.

    Нормированный вектор из 2n независимых стандартных нормальных
    величин, прочитанных как n комплексных координат.

    Returns:
        np.ndarray: Массив формы (count, n)
    """
    gauss = gaussian_block(seed, stream, count, 2 * n)
    points = gauss[:, :n] + 1j * gauss[:, n:]
    return points / np.linalg.norm(points, axis=1, keepdims=True)


def ball_points(seed: int, stream: str, count: int, n: int, radius: float) -> np.ndarray:
    """Точки шара B^n(0, radius), равномерные по объему"""
    directions = sphere_points(seed, stream + ":direction", count, n)
    radii = radius * uniform_block(seed, stream + ":radius", count)[:, 0] ** (1 / (2 * n))
    return directions * radii[:, None]


def radial_grid(count: int, include_boundary: bool = False) -> np.ndarray:
    """Радиусы, сгущающиеся к границе по закону синуса.

    Без границы: sin(pi k / (2 (count + 1))), k = 1..count, все в (0, 1).
    С границей: sin(pi k / (2 count)), k = 1..count, последний радиус равен 1.
    """
    validate_positive_int(count, "count")
    k = np.arange(1, count + 1)
    if include_boundary:
        radii = np.sin(np.pi * k / (2 * count))
        radii[-1] = 1.0
        return radii
    return np.sin(np.pi * k / (2 * (count + 1)))
