"""
Пакет отчетов

Содержит вспомогательные классы для выходных документов:
- RunManifest: паспорт запуска
- CurveTable: таблицы кривых и их вывод в CSV
- SuiteAnalyzer: сводка отчетов набора проверок
"""

from .curve_table import CURVE_KINDS, CurveTable
from .run_manifest import RunManifest, manifest_timestamp
from .suite_analyzer import SuiteAnalyzer

__all__ = ["CURVE_KINDS", "CurveTable", "RunManifest", "SuiteAnalyzer", "manifest_timestamp"]
