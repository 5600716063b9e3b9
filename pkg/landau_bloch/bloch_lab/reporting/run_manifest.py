"""
Паспорт запуска

Сведения о команде, параметрах, зерне и версии, встраиваемые
в каждый выходной документ.
"""

import os
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Optional

TIMESTAMP_FORMAT = "%Y-%m-%dT%H:%M:%SZ"


def manifest_timestamp(wall_clock: bool = False, environ: Optional[dict] = None) -> str:
    """Метка времени UTC.

    По умолчанию берется из SOURCE_DATE_EPOCH (0, если переменная не задана),
    чтобы повторный запуск давал тот же вывод; wall_clock=True - текущее время.

    Raises:
        ValueError: Если SOURCE_DATE_EPOCH не целое число
    """
    if wall_clock:
        moment = datetime.now(timezone.utc)
    else:
        environ = os.environ if environ is None else environ
        raw = environ.get("SOURCE_DATE_EPOCH", "0")
        try:
            epoch = int(raw)
        except ValueError as exc:
            raise ValueError(f"SOURCE_DATE_EPOCH должен быть целым числом: {raw!r}") from exc
        moment = datetime.fromtimestamp(epoch, timezone.utc)
    return moment.strftime(TIMESTAMP_FORMAT)


@dataclass(frozen=True)
class RunManifest:
    """Паспорт запуска.

    Атрибуты:
        command (str): Подкоманда
        parameters (dict): Параметры запуска
        seed (int): Зерно выборки
        tool_version (str): Версия пакета
        timestamp (str): Метка времени UTC
    """

    command: str
    parameters: dict = field(default_factory=dict)
    seed: int = 0
    tool_version: str = ""
    timestamp: str = ""

    @classmethod
    def create(
        cls,
        command: str,
        parameters: dict,
        seed: int,
        tool_version: str,
        wall_clock: bool = False,
    ) -> "RunManifest":
        """Паспорт с меткой времени из manifest_timestamp"""
        return cls(command, dict(parameters), seed, tool_version, manifest_timestamp(wall_clock))

    def to_dict(self) -> dict:
        """Словарь для JSON-вывода"""
        return {
            "command": self.command,
            "parameters": self.parameters,
            "seed": self.seed,
            "tool_version": self.tool_version,
            "timestamp": self.timestamp,
        }
