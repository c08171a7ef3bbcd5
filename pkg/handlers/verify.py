# handlers/verify.py
from __future__ import annotations

import argparse
from pathlib import Path

from handlers.common import EXIT_FALSE, EXIT_OK, print_json
from models import Mode
from rainbow import verify
from texts import VERIFY_FAIL, VERIFY_FAIL_PAIR, VERIFY_OK
from utils.parsing import read_coloring, read_digraph


def handle(args: argparse.Namespace) -> int:
    # оба файла разбираются до проверки, ошибки формата -> код 2
    D = read_digraph(args.graph)
    col = read_coloring(args.coloring, D)
    report = verify(D, col, Mode(args.mode), want_witnesses=args.witnesses, workers=args.workers)

    if args.json:
        print_json(report.model_dump(mode="json"))
    elif report.verdict:
        print(VERIFY_OK.format(mode=report.mode, pairs=report.pairs_checked))
    else:
        print(VERIFY_FAIL.format(mode=report.mode, count=len(report.failures), pairs=report.pairs_checked))
        for u, v in report.failures:
            print(VERIFY_FAIL_PAIR.format(u=u, v=v))
    return EXIT_OK if report.verdict else EXIT_FALSE


def register(sub) -> None:
    p = sub.add_parser("verify", help="проверить раскраску орграфа")
    p.add_argument("graph", type=Path)
    p.add_argument("coloring", type=Path)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.STRONG.value)
    p.add_argument("--json", action="store_true", help="вывести отчёт в JSON")
    p.add_argument("--witnesses", action="store_true", help="добавить найденные пути в отчёт")
    p.add_argument("--workers", type=int, default=1, help="потоков на проверку пар")
    p.set_defaults(func=handle)
