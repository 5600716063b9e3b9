"""
Таблицы кривых

Построение таблиц значений огибающих, оценки радиуса шлихт-шара,
функции phi и радиуса rho1 для внешних построителей графиков.
Таблица выводится в CSV: разделитель запятая, десятичная точка,
переводы строк LF, 17 значащих цифр.
"""

import json
import logging
from typing import Optional

from bloch_lab.bounds import (
    HardyClassParams,
    QuadratureConfig,
    admissible_radii,
    distortion_envelopes,
    hardy_rho0,
    hardy_rho1,
    schlicht_radius_lower,
)
from bloch_lab.constants import BlochClassParams, RootSolverConfig, phi
from bloch_lab.reporting.run_manifest import RunManifest
from bloch_lab.utils import DomainError, validate_positive_int
import numpy as np
import pandas as pd

logger = logging.getLogger(__name__)

CURVE_KINDS = ("lower", "upper", "schlicht-vs-lambda", "phi", "rho1")
FLOAT_FORMAT = "%.17g"


class CurveTable:
    """Класс для построения таблиц кривых"""

    @staticmethod
    def distortion_curve(
        params: BlochClassParams,
        kind: str,
        points: int,
        solver: RootSolverConfig = RootSolverConfig(),
    ) -> pd.DataFrame:
        """
        Огибающая теоремы искажения на равномерной сетке допустимого радиуса

        Args:
            params: Параметры класса
            kind: 'lower' или 'upper'
            points: Число точек сетки, не меньше 2
            solver: Настройки поиска m(lambda)

        Returns:
            DataFrame со столбцами z_abs и значением огибающей

        Raises:
            DomainError: Если допустимый радиус верхней оценки равен 0
        """
        validate_positive_int(points, "points", minimum=2)
        lower_domain, upper_domain = admissible_radii(params, solver)
        domain = lower_domain if kind == "lower" else upper_domain
        if domain <= 0:
            raise DomainError(
                "Верхняя оценка определена только в точке 0 при lambda = 1", limit=0.0
            )
        z_abs = np.linspace(0.0, domain, points)
        z_abs[-1] = domain
        values = distortion_envelopes(z_abs, params, kind, solver)
        return pd.DataFrame({"z_abs": z_abs, f"{kind}_bound": values})

    @staticmethod
    def schlicht_vs_lambda(
        params: BlochClassParams,
        points: int,
        cfg: QuadratureConfig = QuadratureConfig(),
        solver: RootSolverConfig = RootSolverConfig(),
    ) -> pd.DataFrame:
        """Оценка радиуса шлихт-шара при lambda = k / points, k = 1..points"""
        validate_positive_int(points, "points", minimum=2)
        lambdas = np.arange(1, points + 1) / points
        radii = [
            schlicht_radius_lower(params.with_lambda(float(lam)), cfg, solver)
            for lam in lambdas
        ]
        return pd.DataFrame({"lambda": lambdas, "schlicht_radius_lower": radii})

    @staticmethod
    def phi_curve(params: BlochClassParams, points: int) -> pd.DataFrame:
        """Функция phi на равномерной сетке отрезка [0, 1]"""
        validate_positive_int(points, "points", minimum=2)
        x = np.linspace(0.0, 1.0, points)
        return pd.DataFrame({"x": x, "phi": [phi(float(v), params) for v in x]})

    @staticmethod
    def rho1_curve(params: HardyClassParams, points: int) -> pd.DataFrame:
        """rho0 и rho1 при r = k / (points + 1), k = 1..points"""
        validate_positive_int(points, "points", minimum=2)
        r = np.arange(1, points + 1) / (points + 1)
        return pd.DataFrame({
            "r": r,
            "rho0": hardy_rho0(r, params),
            "rho1": hardy_rho1(r, params),
        })

    @staticmethod
    def to_csv(table: pd.DataFrame, manifest: Optional[RunManifest] = None) -> str:
        """CSV с первой строкой-комментарием, содержащей паспорт запуска.

        Без паспорта (manifest=None) выводится только заголовок и строки таблицы.
        """
        header = ""
        if manifest is not None:
            header = "# manifest: " + json.dumps(manifest.to_dict(), sort_keys=True) + "\n"
        body = table.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
        logger.debug("Таблица кривой: %d строк", len(table))
        return header + body
