# handlers/solve.py
from __future__ import annotations

import argparse
import logging
from pathlib import Path

from config import BUDGET_DEFAULT, MAX_COLORS_DEFAULT
from digraph import Digraph
from handlers.common import EXIT_BUDGET, EXIT_OK, print_json
from models import SolveLimits, SolveResult, SolveStatus, Target
from solver import solve
from texts import BUDGET_EXCEEDED
from utils.files import coloring_payload
from utils.parsing import read_digraph

logger = logging.getLogger(__name__)


def result_payload(D: Digraph, result: SolveResult) -> dict:
    """{target, status, value?, lower, upper, nodes, certificate?}."""
    payload = {
        "target": str(result.target),
        "status": str(result.status),
        "lower": result.lower,
        "upper": result.upper,
        "nodes": result.stats.nodes,
        "colorings_tested": result.stats.colorings_tested,
    }
    if result.value is not None:
        payload["value"] = result.value
    if result.certificate is not None:
        payload["certificate"] = coloring_payload(D, result.certificate)
    return payload


def handle(args: argparse.Namespace) -> int:
    D = read_digraph(args.graph)
    limits = SolveLimits(
        max_colors=args.max_colors,
        node_budget=args.budget,
        find_certificate=not args.no_certificate,
    )
    result = solve(D, Target(args.target), limits)
    print_json(result_payload(D, result))
    if result.status == SolveStatus.EXACT:
        return EXIT_OK
    # при исчерпании бюджета или потолка max_colors значение не найдено в пределах лимитов
    logger.warning(BUDGET_EXCEEDED.format(lower=result.lower, upper=result.upper))
    return EXIT_BUDGET


def register(sub) -> None:
    p = sub.add_parser("solve", help="точное rc*/src* перебором")
    p.add_argument("graph", type=Path)
    p.add_argument("--target", choices=[t.value for t in Target], default=Target.SRC.value)
    p.add_argument("--max-colors", type=int, default=MAX_COLORS_DEFAULT)
    p.add_argument("--budget", type=int, default=BUDGET_DEFAULT, help="лимит узлов перебора")
    p.add_argument("--no-certificate", action="store_true", help="не выводить оптимальную раскраску")
    p.set_defaults(func=handle)
