"""
Командная строка rcfw: разбор аргументов, вызов сервисов и коды завершения.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional

from django.conf import settings
from django.test.utils import override_settings
from rest_framework import serializers
from rest_framework.renderers import JSONRenderer

from cad.exceptions import CadCapacityError, CadError, UnsupportedDimensionError
from cad.serializers import CadCellSerializer
from cad.services import (
    CadCell,
    cells_of,
    connected_components,
    decide,
    dimension,
    is_empty,
    is_subset,
    sets_equal,
)
from collapses.exceptions import ComplexError, InvalidStepError
from collapses.serializers import (
    CertificateVerdictSerializer,
    CollapseStepSerializer,
    SearchResultSerializer,
)
from collapses.services import (
    HomotopyCertificate,
    SimplicialComplex,
    apply_step,
    collapse,
    collapse_search,
    collar_cone_map,
    euler_characteristic,
    expansion,
    format_certificate,
    format_complex,
    free_faces,
    parse_certificate,
    parse_complex,
    parse_simplex,
    verify_certificate,
)
from formulas.exceptions import FormulaError, UnsupportedSchemaError
from formulas.models import SchemaKind
from formulas.services import (
    PredicateInstance,
    SchemaService,
    free_vars,
    parse_formula,
    parse_infix,
    serialize,
)
from polycore.exceptions import PolyError
from polycore.services import parse_poly
from semialgebraic.exceptions import CapacityError, DescriptionError
from semialgebraic.serializers import ComplexitySerializer, ParamPointSerializer
from semialgebraic.services import (
    ParamPoint,
    complexity_of,
    decode,
    encode,
    format_description,
    format_param_point,
    parse_param_point,
)
from topology.exceptions import TopologyError
from topology.models import VerdictKind
from topology.serializers import CompactnessSerializer, VerdictSerializer
from topology.services import (
    Verdict,
    check_cobordism,
    check_curve_manifold,
    check_line_manifold,
    compactness_check,
    regularity_check,
    verify_homeo,
)

from ..exceptions import UsageError
from ..models import ExitCode, OutputMode
from ..serializers import FormulaSerializer, RunConfigSerializer, ValueSerializer
from .loaders import collect_sets, load_complex, load_set, load_sets, read_text

logger = logging.getLogger(__name__)

# Порядок важен: классы предела являются подклассами общих ошибок своих приложений
CAPACITY_ERRORS = (CadCapacityError, UnsupportedDimensionError, UnsupportedSchemaError, CapacityError)
USAGE_ERRORS = (
    UsageError,
    PolyError,
    DescriptionError,
    FormulaError,
    CadError,
    TopologyError,
    ComplexError,
    OSError,
)

# Параметры схем; несвязанные параметры становятся символическими множествами
SCHEMA_PARAMETERS = {
    SchemaKind.SUBMANIFOLD: ("S",),
    SchemaKind.BOUNDARY: ("S", "T"),
    SchemaKind.HOMEOMORPHISM: ("a", "b", "c"),
    SchemaKind.COLLAPSE: ("X", "Y", "c"),
}

CAD_ACTIONS = ("cells", "dimension", "components", "empty", "equal", "subset")
CHECK_KINDS = ("manifold", "regularity", "compact", "homeo", "cobordism")
PL_ACTIONS = ("free-faces", "collapse", "expand", "search", "verify", "euler")


@dataclass
class CommandResult:
    """Итог подкоманды: код завершения, строки текстового вывода и запись для --json."""

    code: int
    lines: list[str]
    data: object = None


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser, который сообщает об ошибке исключением вместо выхода из процесса."""

    def error(self, message):
        raise UsageError(message)


def _boolean(command: str, value: bool) -> CommandResult:
    return CommandResult(
        ExitCode.OK if value else ExitCode.REJECT,
        ["true" if value else "false"],
        ValueSerializer({"command": command, "value": value}).data,
    )


def _value(command: str, value, text: Optional[str] = None) -> CommandResult:
    return CommandResult(
        ExitCode.OK,
        [text if text is not None else str(value)],
        ValueSerializer({"command": command, "value": value}).data,
    )


def _verdict(verdict: Verdict) -> CommandResult:
    if verdict.ok:
        code = ExitCode.OK
    elif verdict.kind == VerdictKind.UNSUPPORTED:
        code = ExitCode.UNSUPPORTED
    else:
        code = ExitCode.REJECT
    return CommandResult(code, [str(verdict)], VerdictSerializer(verdict).data)


def format_cell(cell: CadCell) -> str:
    """Строка дампа клетки: индекс, размерность, выборочная точка и знаки."""
    index = ".".join(str(i) for i in cell.index)
    sample = ", ".join(value.to_decimal() for value in cell.sample)
    signs = "".join({-1: "-", 0: "0", 1: "+"}[s] for s in cell.signs)
    return f"{index} dim={cell.dim} sample=({sample}) signs={signs or '-'}"


def _complex_argument(value: str) -> SimplicialComplex:
    """Комплекс из файла .cx или из строки граней."""
    if Path(value).suffix == ".cx":
        return load_complex(value)
    return parse_complex(value)


def _param_point_from_json(text: str) -> ParamPoint:
    try:
        payload = json.loads(text)
    except ValueError as exc:
        raise UsageError(f"Некорректный JSON точки параметров: {exc}") from exc
    serializer = ParamPointSerializer(data=payload)
    if not serializer.is_valid():
        raise UsageError(f"Некорректная точка параметров: {serializer.errors}")
    try:
        return serializer.to_param_point()
    except serializers.ValidationError as exc:
        raise UsageError(f"Некорректная точка параметров: {exc.detail}") from exc


def handle_describe(args) -> CommandResult:
    sets = load_sets(args.ref)
    lines, records = [], []
    for d in sets:
        complexity = complexity_of(d)
        line = f"n={d.ambient} p={complexity.p} q={complexity.q}"
        lines.append(f"{d.name}: {line}" if len(sets) > 1 else line)
        if args.normalize:
            lines.append(format_description(d))
        records.append({"name": d.name, "n": d.ambient, "p": complexity.p, "q": complexity.q})
    data = ComplexitySerializer(records, many=True).data
    return CommandResult(ExitCode.OK, lines, data[0] if len(data) == 1 else data)


def handle_encode(args) -> CommandResult:
    d = load_set(args.ref)
    point = encode(d, args.p, args.q)
    return CommandResult(
        ExitCode.OK, format_param_point(point).splitlines(), ParamPointSerializer(point).data
    )


def handle_decode(args) -> CommandResult:
    text = read_text(args.path)
    point = _param_point_from_json(text) if text.lstrip().startswith("{") else parse_param_point(text)
    return _value("decode", format_description(decode(point, name=args.name)))


def handle_emit(args) -> CommandResult:
    kind = SchemaKind(args.schema)
    bindings: dict[str, object] = {key: key for key in SCHEMA_PARAMETERS[kind]}
    for item in args.bind:
        key, sep, reference = item.partition("=")
        if not sep or key not in bindings:
            raise UsageError(
                f"Привязка {item!r}: ожидалось KEY=PATH[:NAME], KEY из {', '.join(bindings)}"
            )
        bindings[key] = load_set(reference)
    inst = PredicateInstance(
        kind,
        args.n,
        m=args.m,
        r=args.r,
        bindings=bindings,
        p=args.p,
        q=args.q,
        nash_threshold=args.nash,
        ambient=args.ambient,
    )
    formula = SchemaService.compile(inst)
    record = {
        "schema": kind.value,
        "formula": serialize(formula),
        "free": sorted(free_vars(formula)),
    }
    lines = [record["formula"]]
    if args.clauses:
        record["clauses"] = {
            name: serialize(part) for name, part in SchemaService.clauses(inst).items()
        }
        lines = [f"{name}: {text}" for name, text in record["clauses"].items()]
    return CommandResult(ExitCode.OK, lines, FormulaSerializer(record).data)


def handle_decide(args) -> CommandResult:
    if args.file:
        text = read_text(args.file)
    elif args.formula is not None:
        text = args.formula
    else:
        raise UsageError("Нужна формула или --file PATH")
    formula = parse_formula(text) if args.sexpr else parse_infix(text)
    return _boolean("decide", decide(formula))


def handle_cad(args) -> CommandResult:
    command = f"cad {args.action}"
    if args.action in ("equal", "subset"):
        left, right = collect_sets(args.refs, 2)
        value = sets_equal(left, right) if args.action == "equal" else is_subset(left, right)
        return _boolean(command, value)
    (d,) = collect_sets(args.refs, 1)
    if args.action == "cells":
        _, cells = cells_of(d)
        return CommandResult(
            ExitCode.OK, [format_cell(c) for c in cells], CadCellSerializer(cells, many=True).data
        )
    if args.action == "empty":
        return _boolean(command, is_empty(d))
    if args.action == "dimension":
        return _value(command, dimension(d))
    return _value(command, connected_components(d))


def handle_check(args) -> CommandResult:
    if args.kind == "homeo":
        x, y, g = collect_sets(args.refs, 3)
        return _verdict(verify_homeo(x, y, g, seed=args.seed))
    if args.kind == "cobordism":
        return _verdict(check_cobordism(*collect_sets(args.refs, 3)))
    (d,) = collect_sets(args.refs, 1)
    if args.kind == "compact":
        result = compactness_check(d)
        return CommandResult(
            ExitCode.OK if result.compact else ExitCode.REJECT,
            [str(result)],
            CompactnessSerializer(result).data,
        )
    if args.kind == "regularity":
        if args.poly is None:
            raise UsageError("Для проверки регулярности нужен --poly")
        return _verdict(regularity_check(parse_poly(args.poly, d.gens), d))
    if d.ambient == 1:
        return _verdict(check_line_manifold(d, args.m))
    return _verdict(check_curve_manifold(d, args.m))


def _step_simplices(args):
    if len(args.simplices) != 2:
        raise UsageError(f"pl {args.action}: нужны две грани SIGMA TAU")
    return parse_simplex(args.simplices[0]), parse_simplex(args.simplices[1])


def handle_pl(args) -> CommandResult:
    command = f"pl {args.action}"
    if args.action == "verify":
        base = load_complex(args.complex) if args.complex else None
        verdict = verify_certificate(parse_certificate(read_text(args.path), base=base))
        return CommandResult(
            ExitCode.OK if verdict.accepted else ExitCode.REJECT,
            [str(verdict)],
            CertificateVerdictSerializer(verdict).data,
        )
    k = load_complex(args.path)
    if args.action == "euler":
        return _value(command, euler_characteristic(k))
    if args.action == "free-faces":
        steps = [collapse(sigma, tau) for sigma, tau in free_faces(k)]
        return CommandResult(
            ExitCode.OK, [str(step) for step in steps], CollapseStepSerializer(steps, many=True).data
        )
    if args.action in ("collapse", "expand"):
        sigma, tau = _step_simplices(args)
        make_step = collapse if args.action == "collapse" else expansion
        try:
            result = apply_step(k, make_step(sigma, tau))
        except InvalidStepError as exc:
            return CommandResult(
                ExitCode.REJECT,
                [f"reject reason={exc}"],
                ValueSerializer({"command": command, "value": None}).data,
            )
        return _value(command, format_complex(result))

    if args.target is None:
        raise UsageError("pl search: нужен --target")
    target = _complex_argument(args.target)
    result = collapse_search(k, target)
    if result.found:
        certificate = HomotopyCertificate(k, result.steps, fixed=target, target=target)
        lines = format_certificate(certificate).splitlines()
        code = ExitCode.OK
    else:
        lines = [f"{result.status} explored={result.explored}"]
        code = ExitCode.UNSUPPORTED
    return CommandResult(code, lines, SearchResultSerializer(result).data)


def handle_collar(args) -> CommandResult:
    point = [value.strip() for value in args.point.split(",")]
    m = args.m if args.m is not None else len(point) - 1
    image = [str(value) for value in collar_cone_map(point, m, args.lam)]
    return _value("collar", image, ",".join(image))


HANDLERS: dict[str, Callable] = {
    "describe": handle_describe,
    "encode": handle_encode,
    "decode": handle_decode,
    "emit": handle_emit,
    "decide": handle_decide,
    "cad": handle_cad,
    "check": handle_check,
    "pl": handle_pl,
    "collar": handle_collar,
}


def _common_options() -> CommandParser:
    limits = settings.RCFW_HARD_LIMITS
    common = CommandParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Вывод в JSON")
    common.add_argument(
        "--threads",
        type=int,
        help=f"Потоки поиска (по умолчанию {settings.RCFW_THREADS}, предел {limits['threads']})",
    )
    common.add_argument(
        "--max-variables",
        type=int,
        help=f"Число переменных CAD (по умолчанию {settings.RCFW_MAX_VARIABLES}, "
        f"предел {limits['max_variables']})",
    )
    common.add_argument(
        "--max-degree",
        type=int,
        help=f"Степень проекций CAD (по умолчанию {settings.RCFW_MAX_DEGREE}, "
        f"предел {limits['max_degree']})",
    )
    common.add_argument(
        "--budget",
        type=int,
        help=f"Бюджет поиска стягиваний (по умолчанию {settings.RCFW_SEARCH_BUDGET}, "
        f"предел {limits['search_budget']})",
    )
    common.add_argument(
        "--samples",
        type=int,
        help=f"Выборка опровержения гомеоморфизма (по умолчанию {settings.RCFW_FALSIFY_SAMPLES}, "
        f"предел {limits['falsify_samples']})",
    )
    return common


def build_parser() -> CommandParser:
    """Парсер rcfw со всеми подкомандами."""
    common = _common_options()
    parser = CommandParser(prog="rcfw", description="Полуалгебраическая рабочая среда")
    commands = parser.add_subparsers(dest="command", required=True)

    describe = commands.add_parser("describe", parents=[common], help="Размерность и сложность (n, p, q)")
    describe.add_argument("ref", help="PATH[:NAME]")
    describe.add_argument("--normalize", action="store_true", help="Печатать строгую форму описания")

    encode_parser = commands.add_parser("encode", parents=[common], help="Описание -> точка параметров")
    encode_parser.add_argument("ref", help="PATH[:NAME]")
    encode_parser.add_argument("-p", type=int, required=True, help="Число многочленов")
    encode_parser.add_argument("-q", type=int, required=True, help="Максимальная степень")

    decode_parser = commands.add_parser("decode", parents=[common], help="Точка параметров -> описание")
    decode_parser.add_argument("path", help="Файл точки (текст или JSON)")
    decode_parser.add_argument("--name", default="S", help="Имя восстановленного множества")

    emit = commands.add_parser("emit", parents=[common], help="Предложение схемы в виде S-выражения")
    emit.add_argument("schema", choices=SchemaKind.values)
    emit.add_argument("--n", type=int, required=True, help="Размерность пространства или куба")
    emit.add_argument("--m", type=int, default=0, help="Размерность многообразия")
    emit.add_argument("--r", type=int, default=0, help="Гладкость, 0 или 1")
    emit.add_argument("--p", type=int, default=1, help="Число многочленов символических параметров")
    emit.add_argument("--q", type=int, default=2, help="Степень символических параметров")
    emit.add_argument("--nash", type=int, default=None, help="Порог Нэша l")
    emit.add_argument("--ambient", type=int, default=None, help="Пространство образа для collapse")
    emit.add_argument("--bind", action="append", default=[], metavar="KEY=PATH[:NAME]")
    emit.add_argument("--clauses", action="store_true", help="Печатать именованные части")

    decide_parser = commands.add_parser("decide", parents=[common], help="Истинность предложения")
    decide_parser.add_argument("formula", nargs="?", help="Инфиксная запись предложения")
    decide_parser.add_argument("--file", help="Прочитать предложение из файла")
    decide_parser.add_argument("--sexpr", action="store_true", help="Вход в виде S-выражения")

    cad = commands.add_parser("cad", parents=[common], help="Запросы к клеточному разложению")
    cad.add_argument("action", choices=CAD_ACTIONS)
    cad.add_argument("refs", nargs="+", help="PATH[:NAME]")

    check = commands.add_parser("check", parents=[common], help="Геометрические проверки")
    check.add_argument("kind", choices=CHECK_KINDS)
    check.add_argument("refs", nargs="+", help="PATH[:NAME]")
    check.add_argument("--m", type=int, default=1, help="Размерность многообразия")
    check.add_argument("--poly", help="Многочлен для проверки регулярности")
    check.add_argument("--seed", type=int, default=0, help="Зерно выборки опровержения")

    pl = commands.add_parser("pl", parents=[common], help="Симплициальные комплексы и стягивания")
    pl.add_argument("action", choices=PL_ACTIONS)
    pl.add_argument("path", help="Файл комплекса или сертификата")
    pl.add_argument("simplices", nargs="*", help="SIGMA TAU для collapse и expand")
    pl.add_argument("--target", help="Целевой подкомплекс: строка граней или файл .cx")
    pl.add_argument("--complex", help="Базовый комплекс для verify")

    collar = commands.add_parser("collar", parents=[common], help="Отображение конуса с воротником")
    collar.add_argument("--point", required=True, help="Барицентрические координаты через запятую")
    collar.add_argument("--m", type=int, default=None, help="Размерность симплекса")
    collar.add_argument("--lambda", dest="lam", default=None, help="Параметр воротника")
    return parser


def _inputs(args) -> list[str]:
    found = []
    for name in ("ref", "refs", "path", "file"):
        value = getattr(args, name, None)
        if isinstance(value, list):
            found.extend(value)
        elif value:
            found.append(value)
    return found


def _run_config(args) -> RunConfigSerializer:
    serializer = RunConfigSerializer(
        data={
            "command": args.command,
            "inputs": _inputs(args),
            "output": OutputMode.JSON if args.json else OutputMode.TEXT,
            "threads": args.threads,
            "max_variables": args.max_variables,
            "max_degree": args.max_degree,
            "budget": args.budget,
            "samples": args.samples,
        }
    )
    if not serializer.is_valid():
        problems = "; ".join(
            f"--{name.replace('_', '-')}: {' '.join(str(m) for m in messages)}"
            for name, messages in serializer.errors.items()
        )
        raise UsageError(problems)
    return serializer


def _fail(stderr, exc: Exception, code: ExitCode) -> int:
    logger.warning(f"[Workbench] {type(exc).__name__}: {exc}")
    stderr.write(f"rcfw: error: {exc}\n")
    return int(code)


def run(argv: list[str], stdout=None, stderr=None) -> int:
    """Выполняет одну команду rcfw.

    Args:
        argv: Аргументы без имени программы
        stdout: Поток вывода, по умолчанию sys.stdout
        stderr: Поток ошибок, по умолчанию sys.stderr

    Returns:
        int: Код завершения из ExitCode
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        config = _run_config(args)
        logger.info(f"[Workbench] {args.command} {' '.join(config.validated_data['inputs'])}")
        with override_settings(**config.overrides()):
            result = HANDLERS[args.command](args)
    except SystemExit as exc:
        # --help
        return int(ExitCode.OK if not exc.code else ExitCode.USAGE)
    except CAPACITY_ERRORS as exc:
        return _fail(stderr, exc, ExitCode.UNSUPPORTED)
    except USAGE_ERRORS as exc:
        return _fail(stderr, exc, ExitCode.USAGE)
    except Exception as exc:
        logger.error(f"[Workbench] Непредвиденная ошибка: {exc}", exc_info=True)
        stderr.write(f"rcfw: internal error: {exc}\n")
        return int(ExitCode.USAGE)

    if args.json:
        stdout.write(JSONRenderer().render(result.data).decode("utf-8") + "\n")
    elif result.lines:
        stdout.write("\n".join(result.lines) + "\n")
    logger.debug(f"[Workbench] {args.command}: код {int(result.code)}")
    return int(result.code)
