# handlers/gen.py
from __future__ import annotations

import argparse
import logging

from digraph import (
    Digraph,
    biorient,
    circulant,
    cycle_edges,
    directed_cycle,
    figure1_digraph,
    is_strongly_connected,
    multipartite_edges,
    path_edges,
    spanning_subcycle,
    star_edges,
)
from handlers.common import EXIT_OK, add_output_arg, add_size_args, emit, note, require
from texts import GRAPH_SUMMARY, GRAPH_WRITTEN
from utils.files import format_digraph
from utils.parsing import parse_int_list

logger = logging.getLogger(__name__)

FAMILIES = (
    "circulant",
    "biorient-path",
    "biorient-cycle",
    "biorient-star",
    "biorient-multipartite",
    "figure1",
    "dircycle",
    "subcycle",
)


def build(args: argparse.Namespace) -> Digraph:
    family = args.family
    if family == "circulant":
        return circulant(require(args.n, "n"), require(args.set, "set"))
    if family == "biorient-path":
        n = require(args.n, "n")
        return biorient(n, path_edges(n))
    if family == "biorient-cycle":
        n = require(args.n, "n")
        return biorient(n, cycle_edges(n))
    if family == "biorient-star":
        leaves = require(args.n, "n")
        return biorient(leaves + 1, star_edges(leaves))
    if family == "biorient-multipartite":
        n, edges = multipartite_edges(require(args.parts, "parts"))
        return biorient(n, edges)
    if family == "figure1":
        return figure1_digraph(args.extra_arc)
    if family == "dircycle":
        return directed_cycle(require(args.n, "n"))
    # subcycle
    return spanning_subcycle(require(args.n, "n"), args.missing)


def handle(args: argparse.Namespace) -> int:
    D = build(args)
    strong = is_strongly_connected(D)
    logger.info("gen %s: n=%d m=%d", args.family, D.n, D.m)
    emit(format_digraph(D, comment=args.family), args.out)
    if args.out is not None:
        print(GRAPH_WRITTEN.format(path=args.out, n=D.n, m=D.m, strong=strong))
    else:
        note(GRAPH_SUMMARY.format(n=D.n, m=D.m, strong=strong))
    return EXIT_OK


def register(sub) -> None:
    p = sub.add_parser("gen", help="построить орграф и записать его в файл")
    p.add_argument("family", choices=FAMILIES)
    add_size_args(p)
    p.add_argument("--set", type=parse_int_list, help="генераторы циркулянта, например 1,3")
    p.add_argument("--extra-arc", action="store_true", help="figure1: добавить дугу a1->a2")
    add_output_arg(p, "файл орграфа (по умолчанию stdout)")
    p.set_defaults(func=handle)
