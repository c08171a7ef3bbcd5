# handlers/report.py
from __future__ import annotations

import argparse
import logging
from pathlib import Path
from typing import Iterator

import constructions as cons
from config import REPORT_SOLVE_ARCS
from digraph import Digraph, circulant, diameter, distances_from
from errors import HypothesisError
from handlers.common import EXIT_FALSE, EXIT_OK, add_output_arg, emit
from models import ArcColoring, Family, PredictedValue, SolveLimits, SolveStatus, Variant
from rainbow import is_rainbow_connected, is_strong_rainbow_connected
from solver import exact_rc, exact_src
from texts import REPORT_DISAGREE, REPORT_WRITTEN
from utils.files import rows_to_csv, write_xlsx

logger = logging.getLogger(__name__)

HEADER = (
    "family", "params", "predicted_rc", "predicted_src", "diameter", "colors",
    "verified", "solver_rc", "solver_src", "agree",
)

FAMILIES = ("interval", "diameter", "c2k", "square", "multiple", "path", "cycle", "star", "dircycle")

Cell = int | str
Row = tuple[str, str, Cell, Cell, Cell, Cell, bool, Cell, Cell, bool]


def _fmt(params: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in params.items())


def _cell(value: int | None) -> Cell:
    return "" if value is None else value


def _solver_value(D: Digraph, solve) -> int | None:
    if D.m > REPORT_SOLVE_ARCS:
        return None
    result = solve(D, SolveLimits(find_certificate=False))
    return result.value if result.status == SolveStatus.EXACT else None


def construction_row(family: str, params: dict, D: Digraph, col: ArcColoring, pv: PredictedValue) -> Row:
    """
    Строка для раскраски из теоремы: проверка, диаметр, перебор (если орграф маленький).
    Если теорема ничего не говорит про src*, раскраска проверяется как радужная
    и src* не перебирается.
    """
    strong = pv.src is not None
    check = is_strong_rainbow_connected if strong else is_rainbow_connected
    claimed = pv.src if strong else pv.rc
    verified = check(D, col).verdict
    diam = diameter(D)
    solved_rc = _solver_value(D, exact_rc)
    solved_src = _solver_value(D, exact_src) if strong else None
    agree = (
        verified
        and col.c == claimed
        and diam <= pv.rc
        and solved_rc in (None, pv.rc)
        and solved_src in (None, pv.src)
    )
    return (family, _fmt(params), pv.rc, _cell(pv.src), diam, col.c, verified,
            _cell(solved_rc), _cell(solved_src), agree)


def _interval_rows(lo: int, hi: int) -> Iterator[Row]:
    for n in range(max(lo, 3), hi + 1):
        for k in range(1, n - 1):
            D, col = cons.color_circulant_interval(n, k)
            yield construction_row("interval", {"n": n, "k": k}, D, col,
                                   cons.predict(Family.INTERVAL, n=n, k=k))


def _diameter_rows(lo: int, hi: int) -> Iterator[Row]:
    """Формулы расстояний и диаметра против BFS для всех применимых (n, k)."""
    for n in range(max(lo, 3), hi + 1):
        for k in range(2, n):
            if not cons.formula_applies(n, k):
                continue
            D = circulant(n, (1, k))
            bfs = distances_from(D, 0)
            formula = cons.circulant_diameter_formula(n, k)
            diam = diameter(D)
            distances_ok = all(cons.circulant_distance_formula(n, k, i) == bfs[i] for i in range(n))
            yield ("diameter", _fmt({"n": n, "k": k, "formula": formula}), "", "", diam, "", distances_ok,
                   "", "", distances_ok and formula == diam)


def _c2k_rows(lo: int, hi: int) -> Iterator[Row]:
    for k in range(max(lo, 2), hi + 1):
        for variant in Variant:
            D, col = cons.color_c2k(k, variant)
            yield construction_row("c2k", {"k": k, "variant": variant.value}, D, col,
                                   cons.predict(Family.C2K, k=k, variant=variant))


def _square_rows(lo: int, hi: int) -> Iterator[Row]:
    for k in range(max(lo, 3), hi + 1):
        D, col = cons.color_square(k)
        yield construction_row("square", {"k": k}, D, col, cons.predict(Family.SQUARE, k=k))


def _multiple_rows(lo: int, hi: int, a_max: int) -> Iterator[Row]:
    for k in range(max(lo, 3), hi + 1):
        for a in range(k - 1, max(a_max, k - 1) + 1):
            D, col = cons.color_multiple(k, a)
            yield construction_row("multiple", {"k": k, "a": a}, D, col,
                                   cons.predict(Family.MULTIPLE, k=k, a=a))


def _biorientation_rows(kind: str, lo: int, hi: int) -> Iterator[Row]:
    start = {"path": 2, "cycle": 4, "star": 2}[kind]
    for n in range(max(lo, start), hi + 1):
        D, col = cons.color_biorientation(kind, n=n)
        yield construction_row(kind, {"n": n}, D, col, cons.predict(Family(kind), n=n))


def _dircycle_rows(lo: int, hi: int) -> Iterator[Row]:
    for m in range(max(lo, 3), hi + 1):
        D, col = cons.color_directed_cycle(m)
        yield construction_row("dircycle", {"m": m}, D, col, cons.predict(Family.DIRCYCLE, m=m))


def build_rows(family: str, lo: int, hi: int, a_max: int = 5) -> list[Row]:
    """Строки в детерминированном порядке; параметры вне условий теоремы пропускаются."""
    if family == "interval":
        rows = _interval_rows(lo, hi)
    elif family == "diameter":
        rows = _diameter_rows(lo, hi)
    elif family == "c2k":
        rows = _c2k_rows(lo, hi)
    elif family == "square":
        rows = _square_rows(lo, hi)
    elif family == "multiple":
        rows = _multiple_rows(lo, hi, a_max)
    elif family in ("path", "cycle", "star"):
        rows = _biorientation_rows(family, lo, hi)
    elif family == "dircycle":
        rows = _dircycle_rows(lo, hi)
    else:
        raise HypothesisError(f"Семейство {family} не поддерживается отчётом", ", ".join(FAMILIES))
    out = []
    for row in rows:
        logger.info("%s %s: agree=%s", row[0], row[1], row[-1])
        out.append(row)
    return out


def handle(args: argparse.Namespace) -> int:
    rows = build_rows(args.family, args.min, args.max, args.a)
    emit(rows_to_csv(HEADER, rows), args.out)
    if args.xlsx is not None:
        write_xlsx(args.xlsx, HEADER, rows, title=args.family)
    if args.out is not None:
        print(REPORT_WRITTEN.format(rows=len(rows), path=args.out))
    bad = [row for row in rows if not row[-1]]
    if bad:
        logger.warning(REPORT_DISAGREE.format(count=len(bad)))
        return EXIT_FALSE
    return EXIT_OK


def register(sub) -> None:
    p = sub.add_parser("report", help="таблица: теорема, конструкция, BFS, перебор")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--min", type=int, default=1, help="нижняя граница параметра (n, k или m)")
    p.add_argument("--max", type=int, required=True, help="верхняя граница параметра")
    p.add_argument("--a", type=int, default=5, help="multiple: наибольший множитель a")
    p.add_argument("--xlsx", type=Path, help="копия таблицы в Excel")
    add_output_arg(p, "CSV-файл (по умолчанию stdout)")
    p.set_defaults(func=handle)
