# handlers/color.py
from __future__ import annotations

import argparse
from pathlib import Path

import constructions as cons
from digraph import count_asymmetric_arcs
from handlers.common import EXIT_OK, add_output_arg, add_size_args, emit, note, require
from models import Family, Variant
from texts import COLORING_SUMMARY, COLORING_WRITTEN, FIGURE1_NOTE
from utils.files import format_coloring, format_digraph, write_text

CONSTRUCTIONS = (
    "interval", "c2k", "square", "multiple",
    "path", "cycle", "star", "multipartite",
    "subcycle", "dircycle", "complete", "figure1",
)


def build(args: argparse.Namespace):
    """-> (D, раскраска, прогноз числа цветов)."""
    name = args.construction
    if name == "interval":
        n, k = require(args.n, "n"), require(args.k, "k")
        return (*cons.color_circulant_interval(n, k), cons.predict(Family.INTERVAL, n=n, k=k).src)
    if name == "c2k":
        k = require(args.k, "k")
        return (*cons.color_c2k(k, args.variant), cons.predict(Family.C2K, k=k, variant=args.variant).src)
    if name == "square":
        k = require(args.k, "k")
        return (*cons.color_square(k), cons.predict(Family.SQUARE, k=k).src)
    if name == "multiple":
        k, a = require(args.k, "k"), require(args.a, "a")
        return (*cons.color_multiple(k, a), cons.predict(Family.MULTIPLE, k=k, a=a).src)
    if name in ("path", "cycle", "star"):
        n = require(args.n, "n")
        return (*cons.color_biorientation(name, n=n), cons.predict(Family(name), n=n).src)
    if name == "multipartite":
        parts = require(args.parts, "parts")
        return (*cons.color_biorientation(name, parts=parts), cons.predict(Family.MULTIPARTITE, parts=parts).src)
    if name == "subcycle":
        n = require(args.n, "n")
        D, col = cons.color_subcycle(n, args.missing)
        return D, col, cons.predict(Family.SUBCYCLE, n=n, asymmetric=count_asymmetric_arcs(D)).rc
    if name == "dircycle":
        m = require(args.n, "n")
        return (*cons.color_directed_cycle(m), cons.predict(Family.DIRCYCLE, m=m).src)
    if name == "complete":
        n = require(args.n, "n")
        return (*cons.color_complete(n), cons.predict(Family.COMPLETE, n=n).src)
    # figure1: значение 7 подтверждено перебором цветов дуги a1a2, не теоремой
    D, col = cons.figure1(args.extra_arc)
    return D, col, 7


def handle(args: argparse.Namespace) -> int:
    D, col, predicted = build(args)
    if args.construction == "figure1":
        note(FIGURE1_NOTE)
    if args.graph_out is not None:
        write_text(args.graph_out, format_digraph(D, comment=args.construction))
    emit(format_coloring(D, col, comment=args.construction), args.out)
    if args.out is not None:
        print(COLORING_WRITTEN.format(path=args.out, c=col.c, predicted=predicted))
    else:
        note(COLORING_SUMMARY.format(c=col.c, predicted=predicted))
    return EXIT_OK


def register(sub) -> None:
    p = sub.add_parser("color", help="раскраска из теоремы для выбранного семейства")
    p.add_argument("construction", choices=CONSTRUCTIONS)
    add_size_args(p)
    p.add_argument("--variant", choices=[v.value for v in Variant], default=Variant.K.value,
                   help="c2k: второй генератор k или k+1")
    p.add_argument("--extra-arc", action="store_true", help="figure1: орграф D = H + a1a2")
    p.add_argument("--graph-out", type=Path, help="записать ещё и сам орграф")
    add_output_arg(p, "файл раскраски (по умолчанию stdout)")
    p.set_defaults(func=handle)
