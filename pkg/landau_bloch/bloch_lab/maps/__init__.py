"""
Пакет отображений

Содержит классы голоморфных отображений единичного шара:
- HolomorphicMap: базовый класс
- PolyMap: полиномиальное отображение
- ExtremalMap: экстремальное отображение теоремы искажения
"""

from .base_map import HolomorphicMap, eval_map, jacobian
from .extremal_map import ExtremalMap
from .poly_map import PolyMap

__all__ = ["ExtremalMap", "HolomorphicMap", "PolyMap", "eval_map", "jacobian"]
