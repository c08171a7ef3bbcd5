# handlers/distance.py
from __future__ import annotations

import argparse

from constructions import circulant_diameter_formula, circulant_distance_formula
from digraph import circulant, diameter, distances_from
from handlers.common import EXIT_FALSE, EXIT_OK
from texts import DISTANCE_DIAMETER, DISTANCE_MISMATCH, DISTANCE_ROW


def handle(args: argparse.Namespace) -> int:
    """Формулы для C_n({1,k}) против BFS: одна вершина (--i) или все вершины и диаметр."""
    n, k = args.n, args.k
    # InapplicableError уходит в cli и даёт код 2
    formula_diam = circulant_diameter_formula(n, k)
    D = circulant(n, (1, k))
    bfs = distances_from(D, 0)
    vertices = [args.i] if args.i is not None else range(n)

    ok = True
    for i in vertices:
        formula = circulant_distance_formula(n, k, i)
        ok &= formula == bfs[i]
        print(DISTANCE_ROW.format(i=i, formula=formula, bfs=int(bfs[i])))
    bfs_diam = diameter(D)
    ok &= formula_diam == bfs_diam
    print(DISTANCE_DIAMETER.format(formula=formula_diam, bfs=bfs_diam))
    if not ok:
        print(DISTANCE_MISMATCH)
        return EXIT_FALSE
    return EXIT_OK


def register(sub) -> None:
    p = sub.add_parser("distance", help="расстояния в C_n({1,k}): формула и BFS")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--i", type=int, help="только вершина v_i")
    p.set_defaults(func=handle)
