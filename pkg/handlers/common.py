# handlers/common.py
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from utils.files import write_text
from utils.parsing import parse_arc_list, parse_int_list

# код возврата: 0 успех, 1 проверка не прошла, 2 ошибка ввода, 3 бюджет
EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def add_size_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, help="число вершин / модуль / число листьев")
    parser.add_argument("--k", type=int, help="параметр k")
    parser.add_argument("--a", type=int, help="множитель a в n = a*k")
    parser.add_argument("--parts", type=parse_int_list, help="размеры долей через запятую")
    parser.add_argument("--missing", type=parse_arc_list, default=[],
                        help="удалённые дуги bior C_n, например 0-3,2-1")


def add_output_arg(parser: argparse.ArgumentParser, help_text: str = "файл для записи") -> None:
    parser.add_argument("-o", "--out", type=Path, help=help_text)


def emit(text: str, out: Path | None) -> None:
    """В файл, если он задан, иначе в stdout."""
    if out is None:
        sys.stdout.write(text)
    else:
        write_text(out, text)


def note(text: str) -> None:
    """Сводка для человека: stderr, чтобы не смешивать с данными в stdout."""
    print(text, file=sys.stderr)


def print_json(payload) -> None:
    print(json.dumps(payload, ensure_ascii=False, sort_keys=True))


def require(value, name: str):
    """Обязательный для выбранного семейства параметр."""
    if value is None:
        raise ValueError(f"Не задан параметр --{name}")
    return value
