"""
Загрузка и сохранение полиномиальных отображений

Формат файла: JSON {"n": int, "components": [[{"re": ..., "im": ...,
"exp": [...]}, ...], ...]}. При загрузке одночлены очищаются:
одинаковые векторы показателей объединяются, нулевые коэффициенты
удаляются.
"""

import json
from pathlib import Path
from typing import List, Union

from bloch_lab.maps import PolyMap
import pandas as pd

PathLike = Union[str, Path]


def terms_frame(data: dict) -> pd.DataFrame:
    """Одночлены документа как таблица (component, re, im, exp).

    Raises:
        ValueError: При неверной структуре документа
    """
    n = data["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError("Поле n должно быть положительным целым")
    components = data["components"]
    if not isinstance(components, list) or len(components) != n:
        raise ValueError(f"Поле components должно содержать {n} списков")

    rows = []
    for index, terms in enumerate(components):
        for term in terms:
            rows.append({
                "component": index,
                "re": term["re"],
                "im": term["im"],
                "exp": tuple(term["exp"]),
            })
    return pd.DataFrame(rows, columns=["component", "re", "im", "exp"])


def clean_terms(terms_df: pd.DataFrame) -> pd.DataFrame:
    """Очистка одночленов

    Returns:
        pd.DataFrame: Одночлены без дублей показателей и нулевых коэффициентов
    """
    if terms_df.empty:
        return terms_df

    df = terms_df.copy()
    df["re"] = pd.to_numeric(df["re"], errors="raise")
    df["im"] = pd.to_numeric(df["im"], errors="raise")

    # Одинаковые показатели в одной компоненте складываем
    df = df.groupby(["component", "exp"], as_index=False, sort=True)[["re", "im"]].sum()

    # Удаляем нулевые одночлены
    df = df[(df["re"] != 0) | (df["im"] != 0)]
    return df.reset_index(drop=True)


def poly_map_from_dict(data: dict) -> PolyMap:
    """Создание PolyMap из документа с очисткой одночленов"""
    n = data["n"]
    cleaned = clean_terms(terms_frame(data))
    components: List[list] = [[] for _ in range(n)]
    for row in cleaned.itertuples(index=False):
        components[row.component].append((complex(row.re, row.im), row.exp))
    return PolyMap(n, components)


def load_poly_map(file_path: PathLike) -> PolyMap:
    """Загрузка отображения из JSON файла

    Raises:
        ValueError: При ошибке чтения или неверном содержимом файла
    """
    try:
        path = Path(file_path)
        if path.suffix.lower() != ".json":
            raise ValueError("Поддерживаются только JSON файлы")
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        return poly_map_from_dict(data)
    except Exception as e:
        raise ValueError(f"Ошибка загрузки файла: {e}") from e


def save_poly_map(f: PolyMap, file_path: PathLike) -> None:
    """Сохранение отображения в JSON файл"""
    with open(file_path, "w", encoding="utf-8") as fh:
        json.dump(f.to_dict(), fh, indent=2)
        fh.write("\n")
