# rainbow.py
from __future__ import annotations

import logging
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Sequence

from config import MAX_COLOR_CAPACITY
from digraph import (
    INF,
    Digraph,
    biorient,
    distance_matrix,
    distances_from,
    geodesic_arc_ids,
    require_strong,
)
from errors import CapacityError, SpecError, UnreachableError
from models import ArcColoring, Mode, VerificationReport

logger = logging.getLogger(__name__)

Path = tuple[int, ...]


def _color_bits(D: Digraph, col: ArcColoring) -> list[int]:
    if len(col) != D.m:
        raise SpecError(f"Раскраска на {len(col)} дуг, а в орграфе {D.m} дуг")
    if col.c > MAX_COLOR_CAPACITY:
        raise CapacityError(f"Поддерживается не больше {MAX_COLOR_CAPACITY} цветов, получено c={col.c}")
    return [1 << (x - 1) for x in col.colors]


def _search(D: Digraph, bits: Sequence[int], u: int, v: int, allowed: set[int] | None) -> Path | None:
    """
    BFS по состояниям (вершина, множество использованных цветов).

    Состояние с надмножеством цветов в той же вершине доминируется и
    отбрасывается: всё, что достижимо из него, достижимо и из доминирующего
    не позже. Первое достижение v даёт кратчайший радужный маршрут, а он
    автоматически простой путь.
    """
    if u == v:
        return (u,)
    seen: list[list[int]] = [[] for _ in range(D.n)]
    seen[u].append(0)
    parent: dict[tuple[int, int], tuple[tuple[int, int], int]] = {}
    queue = deque([(u, 0)])

    while queue:
        state = queue.popleft()
        x, mask = state
        for j in D.out_arcs[x]:
            if allowed is not None and j not in allowed:
                continue
            bit = bits[j]
            if mask & bit:
                continue
            y = D.arcs[j][1]
            nmask = mask | bit
            if any(old & nmask == old for old in seen[y]):
                continue
            seen[y].append(nmask)
            parent[(y, nmask)] = (state, j)
            if y == v:
                return _unwind(parent, (y, nmask), u)
            queue.append((y, nmask))
    return None


def _unwind(parent, state, u: int) -> Path:
    vertices = [state[0]]
    while state != (u, 0):
        state, _ = parent[state]
        vertices.append(state[0])
    return tuple(reversed(vertices))


def exists_rainbow_path(D: Digraph, col: ArcColoring, u: int, v: int) -> Path | None:
    """Радужный u->v путь (последовательность вершин) или None. Поиск полный."""
    D.check_vertex(u)
    D.check_vertex(v)
    bits = _color_bits(D, col)
    if D.has_arc(u, v):
        return (u, v)
    return _search(D, bits, u, v, None)


def exists_rainbow_geodesic(D: Digraph, col: ArcColoring, u: int, v: int) -> Path | None:
    """То же, но только среди путей длины d(u,v): поиск идёт внутри geodesic_dag."""
    D.check_vertex(u)
    D.check_vertex(v)
    bits = _color_bits(D, col)
    if u == v:
        return (u,)
    if D.has_arc(u, v):
        return (u, v)
    allowed = set(geodesic_arc_ids(D, u, v))
    return _search(D, bits, u, v, allowed)


# ===== Проверка всей раскраски =====

def _pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(n) if u != v]


def _verify(D: Digraph, col: ArcColoring, mode: Mode, want_witnesses: bool, workers: int) -> VerificationReport:
    require_strong(D)
    bits = _color_bits(D, col)
    dist = distance_matrix(D) if mode == Mode.STRONG else None

    def check(pair: tuple[int, int]) -> Path | None:
        u, v = pair
        if D.has_arc(u, v):
            return (u, v)
        if dist is None:
            return _search(D, bits, u, v, None)
        total = dist[u][v]
        allowed = {
            j for j, (x, y) in enumerate(D.arcs)
            if dist[u][x] + 1 + dist[y][v] == total
        }
        return _search(D, bits, u, v, allowed)

    pairs = _pairs(D.n)
    if workers > 1:
        # порядок результатов совпадает с порядком пар независимо от потоков
        with ThreadPoolExecutor(max_workers=workers) as pool:
            found = list(pool.map(check, pairs))
    else:
        found = [check(p) for p in pairs]

    failures = [pair for pair, path in zip(pairs, found) if path is None]
    for u, v in failures:
        logger.debug("%s: нет радужного пути %d->%d", mode, u, v)
    witnesses = None
    if want_witnesses:
        witnesses = {f"{u}->{v}": path for (u, v), path in zip(pairs, found) if path is not None}
    return VerificationReport(
        mode=mode,
        verdict=not failures,
        failures=failures,
        witnesses=witnesses,
        pairs_checked=len(pairs),
    )


def is_rainbow_connected(
    D: Digraph, col: ArcColoring, *, want_witnesses: bool = False, workers: int = 1
) -> VerificationReport:
    return _verify(D, col, Mode.RAINBOW, want_witnesses, workers)


def is_strong_rainbow_connected(
    D: Digraph, col: ArcColoring, *, want_witnesses: bool = False, workers: int = 1
) -> VerificationReport:
    return _verify(D, col, Mode.STRONG, want_witnesses, workers)


def verify(D: Digraph, col: ArcColoring, mode: Mode, **kwargs) -> VerificationReport:
    if Mode(mode) == Mode.STRONG:
        return is_strong_rainbow_connected(D, col, **kwargs)
    return is_rainbow_connected(D, col, **kwargs)


# ===== Вспомогательное =====

def validate_witness(D: Digraph, col: ArcColoring, path: Sequence[int], geodesic: bool = False) -> bool:
    """Путь существует в D, вершины не повторяются, цвета дуг попарно различны."""
    if len(path) == 0 or len(set(path)) != len(path):
        return False
    colors: list[int] = []
    for tail, head in zip(path, path[1:]):
        if not D.has_arc(tail, head):
            return False
        colors.append(col[D.arc_index(tail, head)])
    if len(set(colors)) != len(colors):
        return False
    if geodesic:
        d = distances_from(D, path[0])[path[-1]]
        if d == INF:
            raise UnreachableError(f"{path[-1]} недостижима из {path[0]}")
        return len(path) - 1 == d
    return True


def lift_edge_coloring(
    n: int, edges: Iterable[Sequence[int]], edge_colors: Sequence[int]
) -> tuple[Digraph, ArcColoring]:
    """Биориентация графа, обе дуги ребра получают цвет ребра."""
    edges = list(edges)
    if len(edges) != len(edge_colors):
        raise SpecError(f"{len(edges)} рёбер, но {len(edge_colors)} цветов")
    D = biorient(n, edges)
    colors = [c for c in edge_colors for _ in range(2)]
    return D, ArcColoring.from_colors(colors)
