"""
Анализ наборов проверок

Сводка отчетов BoundReport по случаям набора проверок:
таблица случаев, худшие случаи и итоговый отчет набора.
"""

from typing import List, Tuple

from bloch_lab.services import BoundReport
import pandas as pd


class SuiteAnalyzer:
    """Класс для анализа результатов набора проверок"""

    @staticmethod
    def cases_frame(cases: List[Tuple[str, BoundReport]]) -> pd.DataFrame:
        """
        Таблица случаев набора

        Args:
            cases: Пары (имя случая, отчет)

        Returns:
            DataFrame со столбцами case, samples_tested, violations,
            worst_margin, sharpness_gap
        """
        rows = [
            {
                "case": name,
                "samples_tested": report.samples_tested,
                "violations": report.violations,
                "worst_margin": report.worst_margin,
                "sharpness_gap": report.sharpness_gap,
            }
            for name, report in cases
        ]
        return pd.DataFrame(
            rows,
            columns=["case", "samples_tested", "violations", "worst_margin", "sharpness_gap"],
        )

    @staticmethod
    def worst_cases(cases_df: pd.DataFrame, n: int = 5) -> pd.DataFrame:
        """
        Случаи с наименьшим запасом

        Args:
            cases_df: Таблица случаев
            n: Количество случаев для возврата

        Returns:
            DataFrame, отсортированный по запасу (худшие сначала) и имени
        """
        if cases_df.empty:
            return pd.DataFrame()
        return cases_df.sort_values(
            by=["worst_margin", "case"], ascending=[True, True], kind="stable"
        ).head(n)

    @staticmethod
    def summarize(suite: str, cases: List[Tuple[str, BoundReport]]) -> BoundReport:
        """
        Итоговый отчет набора

        Returns:
            BoundReport: Объединенный отчет; в details - число случаев,
            имена худших случаев и число случаев с нарушениями
        """
        if not cases:
            raise ValueError(f"Набор {suite} не содержит случаев")
        report = BoundReport.combine([r for _, r in cases])
        cases_df = SuiteAnalyzer.cases_frame(cases)
        worst = SuiteAnalyzer.worst_cases(cases_df, n=3)
        report.details = {
            "suite": suite,
            "cases": len(cases),
            "failed_cases": int((cases_df["violations"] > 0).sum()),
            "worst_cases": worst["case"].tolist(),
        }
        return report
