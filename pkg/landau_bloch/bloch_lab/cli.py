"""
Командная строка

Подкоманды:
- constants: константы класса Блоха (a0, m(lambda), допустимые радиусы,
  оценка радиуса шлихт-шара)
- hardy: цепочка констант для пространства Харди
- curve: таблица кривой (lower, upper, schlicht-vs-lambda, phi, rho1)
- verify: набор численных проверок

Результат печатается в stdout (JSON или CSV), диагностика - в stderr.
CSV начинается со строки-комментария с паспортом запуска, если не
задан --no-manifest.
Коды возврата: 0 - успех, 1 - найдены нарушения или численный сбой,
2 - ошибка параметров.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from bloch_lab import __version__
from bloch_lab.bounds import (
    HardyClassParams,
    admissible_radii,
    hardy_landau,
    schlicht_radius_lower,
)
from bloch_lab.constants import BlochClassParams, a0, m_of_lambda, subordination_radius
from bloch_lab.reporting import CURVE_KINDS, CurveTable, RunManifest, SuiteAnalyzer
from bloch_lab.services import (
    DEFAULT_SAMPLES,
    SUITE_NAMES,
    SamplingConfig,
    load_poly_map,
    run_suite,
)
import pandas as pd

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2

DEFAULT_POINTS = 101
DEFAULT_TOL = 1e-9


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=float, default=1.0, help="alpha > 0 (по умолчанию 1)")
    common.add_argument("--n", type=int, default=1, help="размерность n >= 1 (по умолчанию 1)")
    common.add_argument(
        "--lambda", dest="lam", type=float, default=1.0,
        help="lambda из (0, 1] (по умолчанию 1)",
    )
    common.add_argument("--K", type=float, default=1.0, help="K >= 1 (по умолчанию 1)")
    common.add_argument("--p", type=float, default=2.0, help="показатель Харди p > 0 (по умолчанию 2)")
    common.add_argument("--k0", type=float, default=1.0, help="K0 >= lambda0 (по умолчанию 1)")
    common.add_argument("--lambda0", type=float, default=1.0, help="lambda0 > 0 (по умолчанию 1)")
    common.add_argument("--seed", type=int, default=0, help="зерно выборки (по умолчанию 0)")
    common.add_argument(
        "--samples", type=int, default=None,
        help="объем выборки набора (по умолчанию зависит от набора)",
    )
    common.add_argument(
        "--points", type=int, default=DEFAULT_POINTS,
        help=f"число точек кривой, не меньше 2 (по умолчанию {DEFAULT_POINTS})",
    )
    common.add_argument(
        "--tol", type=float, default=DEFAULT_TOL,
        help=f"допуск численной погрешности проверок (по умолчанию {DEFAULT_TOL:g})",
    )
    common.add_argument(
        "--format", choices=("json", "csv"), default=None,
        help="формат вывода (по умолчанию csv для curve, json для остальных)",
    )
    common.add_argument("--map-file", default=None, help="JSON файл с PolyMap")
    common.add_argument("--verbose", action="store_true", help="отладочный вывод в stderr")
    common.add_argument(
        "--no-manifest", action="store_true",
        help="CSV без первой строки с паспортом запуска (JSON не меняется)",
    )
    common.add_argument(
        "--wall-clock", action="store_true",
        help="метка времени паспорта по текущим часам вместо SOURCE_DATE_EPOCH",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    """Парсер аргументов командной строки"""
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="bloch_lab",
        description="Константы Ландау-Блоха: вычисление и численная проверка",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("constants", parents=[common], help="константы класса Блоха")
    commands.add_parser("hardy", parents=[common], help="константы для пространства Харди")
    curve = commands.add_parser("curve", parents=[common], help="таблица кривой")
    curve.add_argument("kind", choices=CURVE_KINDS)
    verify = commands.add_parser("verify", parents=[common], help="набор численных проверок")
    verify.add_argument("suite", choices=SUITE_NAMES)
    return parser


def _bloch_params(args: argparse.Namespace) -> BlochClassParams:
    return BlochClassParams(args.alpha, args.n, args.lam, args.K)


def _hardy_params(args: argparse.Namespace) -> HardyClassParams:
    return HardyClassParams(args.p, args.n, args.k0, args.lambda0)


def _manifest(args: argparse.Namespace, parameters: dict) -> RunManifest:
    return RunManifest.create(args.command, parameters, args.seed, __version__, args.wall_clock)


def _render(
    document: dict, table: pd.DataFrame, manifest: RunManifest, fmt: str, with_manifest: bool = True
) -> str:
    if fmt == "csv":
        return CurveTable.to_csv(table, manifest if with_manifest else None)
    document = {"manifest": manifest.to_dict(), **document}
    return json.dumps(document, sort_keys=True, indent=2, allow_nan=False) + "\n"


def cmd_constants(args: argparse.Namespace) -> int:
    """Константы класса Блоха"""
    params = _bloch_params(args)
    lower_domain, upper_domain = admissible_radii(params)
    record = {
        "a0": a0(params),
        "m_lambda": m_of_lambda(params),
        "admissible_lower_radius": lower_domain,
        "admissible_upper_radius": upper_domain,
        "schlicht_radius_lower": schlicht_radius_lower(params),
        "subordination_radius": subordination_radius(params),
    }
    manifest = _manifest(args, params.to_dict())
    document = {"params": params.to_dict(), **record}
    table = pd.DataFrame([record])
    text = _render(document, table, manifest, args.format or "json", not args.no_manifest)
    sys.stdout.write(text)
    return EXIT_OK


def cmd_hardy(args: argparse.Namespace) -> int:
    """Цепочка констант для пространства Харди"""
    params = _hardy_params(args)
    record = hardy_landau(params).to_dict()
    manifest = _manifest(args, params.to_dict())
    document = {"params": params.to_dict(), **record}
    table = pd.DataFrame([record])
    text = _render(document, table, manifest, args.format or "json", not args.no_manifest)
    sys.stdout.write(text)
    return EXIT_OK


def cmd_curve(args: argparse.Namespace) -> int:
    """Таблица кривой"""
    if args.kind == "rho1":
        params = _hardy_params(args)
        table = CurveTable.rho1_curve(params, args.points)
    else:
        params = _bloch_params(args)
        if args.kind == "schlicht-vs-lambda":
            table = CurveTable.schlicht_vs_lambda(params, args.points)
        elif args.kind == "phi":
            table = CurveTable.phi_curve(params, args.points)
        else:
            table = CurveTable.distortion_curve(params, args.kind, args.points)

    parameters = {**params.to_dict(), "kind": args.kind, "points": args.points}
    manifest = _manifest(args, parameters)
    document = {"kind": args.kind, "columns": list(table.columns), "rows": table.values.tolist()}
    text = _render(document, table, manifest, args.format or "csv", not args.no_manifest)
    sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Набор численных проверок"""
    samples = args.samples if args.samples is not None else DEFAULT_SAMPLES[args.suite]
    cfg = SamplingConfig(seed=args.seed, sphere_samples=samples, pair_samples=samples)
    map_file_map = load_poly_map(args.map_file) if args.map_file else None

    cases = run_suite(args.suite, cfg, args.tol, map_file_map, alpha=args.alpha, k0=args.k0)
    report = SuiteAnalyzer.summarize(args.suite, cases)

    parameters = {"suite": args.suite, "samples": samples, "tol": args.tol}
    if args.map_file:
        parameters["map_file"] = str(args.map_file)
    manifest = _manifest(args, parameters)
    document = {
        "suite": args.suite,
        "passed": report.passed,
        "report": report.to_dict(),
        "cases": [{"case": name, **case.to_dict()} for name, case in cases],
    }
    table = SuiteAnalyzer.cases_frame(cases)
    text = _render(document, table, manifest, args.format or "json", not args.no_manifest)
    sys.stdout.write(text)
    if not report.passed:
        print(
            f"Набор {args.suite}: нарушений {report.violations}, "
            f"худший запас {report.worst_margin:.3e}",
            file=sys.stderr,
        )
        return EXIT_VIOLATIONS
    return EXIT_OK


COMMANDS = {
    "constants": cmd_constants,
    "hardy": cmd_hardy,
    "curve": cmd_curve,
    "verify": cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Точка входа командной строки.

    Args:
        argv: Аргументы без имени программы (по умолчанию sys.argv[1:])

    Returns:
        int: Код возврата
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )

    try:
        return COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"Ошибка параметров: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as exc:
        print(f"Численный сбой: {exc}", file=sys.stderr)
        return EXIT_VIOLATIONS
