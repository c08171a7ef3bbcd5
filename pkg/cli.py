# cli.py
from __future__ import annotations

import argparse
import logging
import sys

from errors import HypothesisError, RefusalError
from handlers import VERBS
from handlers.common import EXIT_INPUT
from logging_config import setup_logging
from texts import DESCRIPTION, HYPOTHESIS_FAILED, INPUT_ERROR, REFUSED

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rcdc", description=DESCRIPTION)
    parser.add_argument("-v", "--verbose", action="store_true", help="логи уровня INFO")
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in VERBS:
        verb.register(sub)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse сам печатает usage; --help даёт 0, ошибка разбора 2
        return int(e.code or 0)

    setup_logging(logging.INFO if args.verbose else None)

    try:
        return args.func(args)
    except RefusalError as e:
        logger.warning("%s: отказ (%s)", args.verb, e)
        print(REFUSED.format(error=e), file=sys.stderr)
        return EXIT_INPUT
    except HypothesisError as e:
        logger.warning("%s: условия теоремы не выполнены (%s)", args.verb, e)
        print(HYPOTHESIS_FAILED.format(error=e, precondition=e.precondition), file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, OSError) as e:
        # сюда же попадают pydantic.ValidationError и все SpecError
        logger.warning("%s: ошибка входных данных (%s)", args.verb, e)
        print(INPUT_ERROR.format(error=e), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
