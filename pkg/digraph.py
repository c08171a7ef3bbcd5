# digraph.py
from __future__ import annotations

import logging
import math
from collections import deque
from functools import cached_property
from typing import Iterable, Sequence

from pydantic import BaseModel, ConfigDict, model_validator

from errors import InapplicableError, NotStronglyConnectedError, SpecError, UnreachableError
from models import CirculantSpec

logger = logging.getLogger(__name__)

# недостижимая вершина; явный маркер, а не "большое число"
INF = math.inf


class Digraph(BaseModel):
    """
    Орграф на вершинах 0..n-1.

    Индекс дуги равен её позиции в arcs; раскраски ссылаются именно на него,
    поэтому порядок дуг никогда не меняется.
    """
    model_config = ConfigDict(frozen=True)

    n: int
    arcs: tuple[tuple[int, int], ...] = ()

    @model_validator(mode="after")
    def _check(self) -> "Digraph":
        if self.n < 1:
            raise SpecError(f"Число вершин n={self.n} должно быть >= 1")
        seen: set[tuple[int, int]] = set()
        for tail, head in self.arcs:
            if not (0 <= tail < self.n and 0 <= head < self.n):
                raise SpecError(f"Дуга {tail}->{head} вне 0..{self.n - 1}")
            if tail == head:
                raise SpecError(f"Петля в вершине {tail}")
            if (tail, head) in seen:
                raise SpecError(f"Повторная дуга {tail}->{head}")
            seen.add((tail, head))
        return self

    # ===== Смежность (считается один раз) =====

    @property
    def m(self) -> int:
        return len(self.arcs)

    @cached_property
    def arc_ids(self) -> dict[tuple[int, int], int]:
        return {arc: j for j, arc in enumerate(self.arcs)}

    @cached_property
    def out_arcs(self) -> tuple[tuple[int, ...], ...]:
        """Для каждой вершины индексы исходящих дуг в порядке списка."""
        out: list[list[int]] = [[] for _ in range(self.n)]
        for j, (tail, _) in enumerate(self.arcs):
            out[tail].append(j)
        return tuple(tuple(x) for x in out)

    @cached_property
    def in_arcs(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for j, (_, head) in enumerate(self.arcs):
            inc[head].append(j)
        return tuple(tuple(x) for x in inc)

    def out_neighbors(self, v: int) -> list[int]:
        return [self.arcs[j][1] for j in self.out_arcs[v]]

    def in_neighbors(self, v: int) -> list[int]:
        return [self.arcs[j][0] for j in self.in_arcs[v]]

    def has_arc(self, tail: int, head: int) -> bool:
        return (tail, head) in self.arc_ids

    def arc_index(self, tail: int, head: int) -> int:
        try:
            return self.arc_ids[(tail, head)]
        except KeyError:
            raise SpecError(f"Дуги {tail}->{head} нет в орграфе") from None

    def reverse(self) -> "Digraph":
        return Digraph(n=self.n, arcs=tuple((h, t) for t, h in self.arcs))

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise SpecError(f"Вершина {v} вне 0..{self.n - 1}")


# ===== Генераторы =====

def make_circulant(spec: CirculantSpec) -> Digraph:
    """Дуги упорядочены по (генератор, хвост): сначала все s1-скачки, потом s2-скачки и т.д."""
    n = spec.n
    arcs = tuple((i, (i + s) % n) for s in spec.S for i in range(n))
    return Digraph(n=n, arcs=arcs)


def circulant(n: int, generators: Iterable[int]) -> Digraph:
    return make_circulant(CirculantSpec(n=n, S=tuple(generators)))


def biorient(n: int, edges: Iterable[Sequence[int]]) -> Digraph:
    """Каждое ребро {u, v} превращается в пару дуг u->v, v->u (в этом порядке)."""
    arcs: list[tuple[int, int]] = []
    seen: set[frozenset[int]] = set()
    for edge in edges:
        u, v = (int(x) for x in edge)
        if u == v:
            raise SpecError(f"Петля {u}-{v} в списке рёбер")
        key = frozenset((u, v))
        if key in seen:
            raise SpecError(f"Повторное ребро {u}-{v}")
        seen.add(key)
        arcs.append((u, v))
        arcs.append((v, u))
    return Digraph(n=n, arcs=tuple(arcs))


def path_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def cycle_edges(n: int) -> list[tuple[int, int]]:
    if n < 3:
        raise SpecError(f"Цикл C_{n} требует n >= 3")
    return [(i, (i + 1) % n) for i in range(n)]


def star_edges(leaves: int) -> list[tuple[int, int]]:
    """K_{1,leaves}: центр 0, листья 1..leaves."""
    return [(0, i) for i in range(1, leaves + 1)]


def multipartite_edges(parts: Sequence[int]) -> tuple[int, list[tuple[int, int]]]:
    """Полный многодольный граф; доли нумеруются подряд: 0..p1-1, p1..p1+p2-1, ..."""
    if any(p < 1 for p in parts):
        raise SpecError(f"Пустая доля в {list(parts)}")
    part_of = [idx for idx, size in enumerate(parts) for _ in range(size)]
    n = len(part_of)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if part_of[u] != part_of[v]]
    return n, edges


def part_index(parts: Sequence[int]) -> list[int]:
    return [idx for idx, size in enumerate(parts) for _ in range(size)]


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise SpecError(f"Ориентированный цикл требует n >= 2, получено {n}")
    return Digraph(n=n, arcs=tuple((i, (i + 1) % n) for i in range(n)))


def complete_biorientation(n: int) -> Digraph:
    return biorient(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def spanning_subcycle(n: int, missing: Iterable[Sequence[int]]) -> Digraph:
    """bior C_n без указанных дуг; порядок оставшихся дуг как в biorient."""
    full = biorient(n, cycle_edges(n))
    drop: set[tuple[int, int]] = set()
    for arc in missing:
        tail, head = (int(x) for x in arc)
        if not full.has_arc(tail, head):
            raise SpecError(f"Дуги {tail}->{head} нет в bior C_{n}")
        drop.add((tail, head))
    return Digraph(n=n, arcs=tuple(a for a in full.arcs if a not in drop))


# вершины орграфа с рисунка: u1..u4, v1..v4, a1, a2, b1..b3
FIGURE1_NAMES = ("u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4", "a1", "a2", "b1", "b2", "b3")


def figure1_digraph(with_extra_arc: bool = False) -> Digraph:
    """
    Орграф H (13 вершин, 24 дуги); с with_extra_arc добавляется дуга a1->a2 (D).
    Дуга a1->a2 идёт последней, так что индексы дуг H образуют префикс индексов D.
    """
    idx = {name: i for i, name in enumerate(FIGURE1_NAMES)}
    a1, a2 = idx["a1"], idx["a2"]
    arcs: list[tuple[int, int]] = [(idx[f"u{i}"], idx[f"v{i}"]) for i in range(1, 5)]
    arcs += [(idx[f"v{i}"], a1) for i in range(1, 4)]
    arcs += [(a1, idx[f"u{i}"]) for i in range(1, 4)]
    for j in range(1, 4):
        b = idx[f"b{j}"]
        arcs += [(a1, b), (b, a1), (b, a2), (a2, b)]
    arcs += [(a2, idx["u4"]), (idx["v4"], a2)]
    if with_extra_arc:
        arcs.append((a1, a2))
    return Digraph(n=len(FIGURE1_NAMES), arcs=tuple(arcs))


# ===== Достижимость и расстояния =====

def _bfs(n: int, start: int, neighbors) -> list[float]:
    dist: list[float] = [INF] * n
    dist[start] = 0
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in neighbors(x):
            if dist[y] == INF:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distances_from(D: Digraph, u: int) -> list[float]:
    """Точные BFS-расстояния от u; INF для недостижимых."""
    D.check_vertex(u)
    return _bfs(D.n, u, D.out_neighbors)


def distances_to(D: Digraph, v: int) -> list[float]:
    D.check_vertex(v)
    return _bfs(D.n, v, D.in_neighbors)


def is_strongly_connected(D: Digraph) -> bool:
    forward = _bfs(D.n, 0, D.out_neighbors)
    if INF in forward:
        return False
    return INF not in _bfs(D.n, 0, D.in_neighbors)


def require_strong(D: Digraph) -> None:
    if not is_strongly_connected(D):
        raise NotStronglyConnectedError(f"Орграф (n={D.n}, m={D.m}) не сильно связен")


def distance_matrix(D: Digraph) -> list[list[float]]:
    return [distances_from(D, u) for u in range(D.n)]


def diameter(D: Digraph) -> int:
    require_strong(D)
    return int(max(max(row) for row in distance_matrix(D)))


def count_asymmetric_arcs(D: Digraph) -> int:
    return sum(1 for tail, head in D.arcs if not D.has_arc(head, tail))


def is_symmetric(D: Digraph) -> bool:
    return count_asymmetric_arcs(D) == 0


# ===== Геодезические =====

def geodesic_arc_ids(D: Digraph, u: int, v: int) -> list[int]:
    """
    Индексы дуг (x, y) с d(u,x) + 1 + d(y,v) = d(u,v), в порядке списка дуг D.
    Ровно эти дуги лежат на u->v геодезических.
    """
    from_u = distances_from(D, u)
    to_v = distances_to(D, v)
    total = from_u[v]
    if total == INF:
        raise UnreachableError(f"Вершина {v} недостижима из {u}")
    return [
        j for j, (x, y) in enumerate(D.arcs)
        if from_u[x] + 1 + to_v[y] == total
    ]


def geodesic_dag(D: Digraph, u: int, v: int) -> Digraph:
    ids = geodesic_arc_ids(D, u, v)
    return Digraph(n=D.n, arcs=tuple(D.arcs[j] for j in ids))


# ===== Нормализация циркулянтов =====

def _units(spec: CirculantSpec) -> list[int]:
    return [a for a in spec.S if math.gcd(a, spec.n) == 1]


def normalize_circulant_pair(spec: CirculantSpec, unit: int | None = None) -> CirculantSpec:
    """
    C_n({a1, a2}) ≅ C_n({1, b*a2}), где b обратный к a1 по модулю n.

    Без unit берётся тот обратимый генератор, при котором второй генератор
    получается наименьшим; так {1,3} в Z_5 переходит в {1,2}.
    """
    if len(spec.S) != 2:
        raise SpecError(f"Нормализуется только пара генераторов, получено {spec.S}")
    units = _units(spec)
    if unit is not None:
        if unit not in units:
            raise InapplicableError(f"{unit} не обратимый генератор {spec.label()}")
        units = [unit]
    if not units:
        raise InapplicableError(f"В {spec.label()} нет генератора, взаимно простого с n")

    best: tuple[int, int] | None = None
    for a1 in units:
        a2 = next(s for s in spec.S if s != a1)
        second = pow(a1, -1, spec.n) * a2 % spec.n
        if best is None or (second, a1) < best:
            best = (second, a1)
    assert best is not None
    return CirculantSpec(n=spec.n, S=(1, best[0]))


def normalization_map(spec: CirculantSpec, unit: int) -> list[int]:
    """Биекция i -> b*i (mod n), переводящая C_n({unit, a2}) в нормализованный."""
    if math.gcd(unit, spec.n) != 1:
        raise InapplicableError(f"{unit} не взаимно прост с {spec.n}")
    b = pow(unit, -1, spec.n)
    return [b * i % spec.n for i in range(spec.n)]


def relabel(D: Digraph, mapping: Sequence[int]) -> Digraph:
    return Digraph(n=D.n, arcs=tuple((mapping[t], mapping[h]) for t, h in D.arcs))
