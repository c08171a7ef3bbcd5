# solver.py
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from digraph import Digraph, diameter, distance_matrix, is_strongly_connected, require_strong
from errors import SpecError
from models import (
    ArcColoring,
    SolveLimits,
    SolveResult,
    SolveStats,
    SolveStatus,
    Target,
)
from rainbow import verify

logger = logging.getLogger(__name__)

# полный перебор орграфов: 2^(n(n-1)) подмножеств дуг
EXHAUSTIVE_MAX_N = 4


class _BudgetExceeded(Exception):
    pass


# ===== Кандидатные пути для forward checking =====

def _geodesic_paths(D: Digraph, dist, u: int, v: int) -> list[tuple[int, ...]]:
    """Все u->v геодезические как кортежи индексов дуг."""
    total = dist[u][v]
    paths: list[tuple[int, ...]] = []

    def walk(x: int, acc: list[int]) -> None:
        if x == v:
            paths.append(tuple(acc))
            return
        for j in D.out_arcs[x]:
            y = D.arcs[j][1]
            if dist[u][y] == dist[u][x] + 1 and dist[y][v] == total - dist[u][y]:
                acc.append(j)
                walk(y, acc)
                acc.pop()

    walk(u, [])
    return paths


def _short_paths(D: Digraph, u: int, v: int, limit: int) -> list[tuple[int, ...]]:
    """Все простые u->v пути длины не больше limit."""
    paths: list[tuple[int, ...]] = []
    on_path = [False] * D.n
    on_path[u] = True

    def walk(x: int, acc: list[int]) -> None:
        if x == v:
            paths.append(tuple(acc))
            return
        if len(acc) == limit:
            return
        for j in D.out_arcs[x]:
            y = D.arcs[j][1]
            if on_path[y]:
                continue
            on_path[y] = True
            acc.append(j)
            walk(y, acc)
            acc.pop()
            on_path[y] = False

    walk(u, [])
    return paths


@dataclass
class _Candidates:
    """
    Для каждой упорядоченной пары без прямой дуги: её пути-кандидаты.
    Кандидат «мёртв», когда два его уже покрашенных ребра совпали по цвету;
    пара без живых кандидатов означает, что ветку можно отсекать.
    """
    pair_of: list[int] = field(default_factory=list)
    by_arc: list[list[int]] = field(default_factory=list)
    alive: list[int] = field(default_factory=list)
    masks: list[int] = field(default_factory=list)
    dead: list[bool] = field(default_factory=list)

    @classmethod
    def build(cls, D: Digraph, target: Target, c: int, dist) -> "_Candidates":
        self = cls(by_arc=[[] for _ in range(D.m)])
        for u in range(D.n):
            for v in range(D.n):
                if u == v or D.has_arc(u, v):
                    continue
                if target == Target.SRC:
                    paths = _geodesic_paths(D, dist, u, v)
                else:
                    paths = _short_paths(D, u, v, c)
                pair = len(self.alive)
                self.alive.append(len(paths))
                for path in paths:
                    cand = len(self.pair_of)
                    self.pair_of.append(pair)
                    self.masks.append(0)
                    self.dead.append(False)
                    for j in path:
                        self.by_arc[j].append(cand)
        return self

    def feasible(self) -> bool:
        return all(self.alive)

    def assign(self, j: int, color: int) -> tuple[list[int], list[int], bool]:
        bit = 1 << color
        killed: list[int] = []
        touched: list[int] = []
        ok = True
        for cand in self.by_arc[j]:
            if self.dead[cand]:
                continue
            if self.masks[cand] & bit:
                self.dead[cand] = True
                killed.append(cand)
                pair = self.pair_of[cand]
                self.alive[pair] -= 1
                if self.alive[pair] == 0:
                    ok = False
            else:
                self.masks[cand] |= bit
                touched.append(cand)
        return killed, touched, ok

    def undo(self, color: int, killed: list[int], touched: list[int]) -> None:
        bit = 1 << color
        for cand in touched:
            self.masks[cand] &= ~bit
        for cand in killed:
            self.dead[cand] = False
            self.alive[self.pair_of[cand]] += 1


# ===== Поиск с возвратом =====

@dataclass
class _Search:
    D: Digraph
    target: Target
    budget: int
    nodes: int = 0
    tested: int = 0

    def run_level(self, c: int, dist) -> tuple[int, ...] | None:
        """
        Лексикографически наименьшая допустимая раскраска с не более чем c цветами.
        Канонизация по первому появлению: дуга j получает цвет не больше
        1 + максимум цветов дуг 0..j-1.
        """
        cands = _Candidates.build(self.D, self.target, c, dist)
        if not cands.feasible():
            return None
        colors = [0] * self.D.m
        return self._extend(0, 0, c, colors, cands)

    def _extend(self, j: int, top: int, c: int, colors: list[int], cands: _Candidates) -> tuple[int, ...] | None:
        if j == self.D.m:
            self.tested += 1
            col = ArcColoring(colors=tuple(colors), c=c)
            # финальное слово всегда за верификатором
            if verify(self.D, col, self.target.mode).verdict:
                return tuple(colors)
            return None
        for color in range(1, min(c, top + 1) + 1):
            self.nodes += 1
            if self.nodes > self.budget:
                raise _BudgetExceeded
            killed, touched, ok = cands.assign(j, color)
            if ok:
                colors[j] = color
                found = self._extend(j + 1, max(top, color), c, colors, cands)
                if found is not None:
                    return found
            cands.undo(color, killed, touched)
        colors[j] = 0
        return None


def _solve(D: Digraph, target: Target, limits: SolveLimits | None) -> SolveResult:
    limits = limits or SolveLimits()
    require_strong(D)
    if D.n == 1:
        return SolveResult(target=target, status=SolveStatus.EXACT, value=0, lower=0, upper=0)

    lower = diameter(D)
    # все дуги разного цвета: любой путь радужный
    upper = D.m
    dist = distance_matrix(D)
    search = _Search(D=D, target=target, budget=limits.node_budget)
    levels: list[int] = []

    def stats() -> SolveStats:
        return SolveStats(nodes=search.nodes, colorings_tested=search.tested, levels=list(levels))

    c = lower
    while c <= min(limits.max_colors, upper):
        levels.append(c)
        logger.info("%s: пробуем c=%d (узлов %d)", target, c, search.nodes)
        try:
            found = search.run_level(c, dist)
        except _BudgetExceeded:
            logger.warning("%s: бюджет %d узлов исчерпан на c=%d", target, limits.node_budget, c)
            return SolveResult(
                target=target, status=SolveStatus.BUDGET_EXCEEDED,
                lower=c, upper=upper, stats=stats(),
            )
        if found is not None:
            certificate = ArcColoring(colors=found, c=c) if limits.find_certificate else None
            return SolveResult(
                target=target, status=SolveStatus.EXACT, value=c,
                lower=c, upper=c, stats=stats(), certificate=certificate,
            )
        c += 1

    # дошли до потолка max_colors, раскраски нет
    return SolveResult(
        target=target, status=SolveStatus.BOUNDS,
        lower=max(lower, limits.max_colors + 1), upper=upper, stats=stats(),
    )


def exact_rc(D: Digraph, limits: SolveLimits | None = None) -> SolveResult:
    """rc*(D): перебор c от diam(D) вверх, на каждом уровне поиск с возвратом."""
    return _solve(D, Target.RC, limits)


def exact_src(D: Digraph, limits: SolveLimits | None = None) -> SolveResult:
    return _solve(D, Target.SRC, limits)


def solve(D: Digraph, target: Target | str, limits: SolveLimits | None = None) -> SolveResult:
    return _solve(D, Target(target), limits)


# ===== Перечисление малых сильно связных орграфов =====

def enumerate_strong_digraphs(n: int, cap: int | None = None) -> Iterator[Digraph]:
    """
    Все сильно связные орграфы на вершинах 0..n-1 (помеченные), не больше cap.
    Порядок детерминирован: подмножества дуг по возрастанию битовой маски,
    бит i отвечает i-й упорядоченной паре в лексикографическом порядке.
    """
    if not 1 <= n <= EXHAUSTIVE_MAX_N:
        raise SpecError(f"Полный перебор поддерживается для 1 <= n <= {EXHAUSTIVE_MAX_N}, получено n={n}")
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    emitted = 0
    for bits in product((0, 1), repeat=len(pairs)):
        if cap is not None and emitted >= cap:
            return
        # product идёт от старшего бита к младшему; разворачиваем, чтобы маска росла
        chosen = tuple(pair for pair, bit in zip(pairs, reversed(bits)) if bit)
        D = Digraph(n=n, arcs=chosen)
        if is_strongly_connected(D):
            emitted += 1
            yield D


def count_strong_digraphs(n: int) -> int:
    return sum(1 for _ in enumerate_strong_digraphs(n))
