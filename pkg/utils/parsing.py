# utils/parsing.py
from __future__ import annotations

from pathlib import Path
from typing import Iterator

from digraph import Digraph
from errors import SpecError
from models import ArcColoring


def _decode(data: bytes | str) -> str:
    if isinstance(data, bytes):
        # файлы из Excel/блокнота бывают с BOM
        return data.decode("utf-8-sig")
    return data


def _rows(text: str) -> Iterator[tuple[int, list[str]]]:
    """Непустые строки без комментариев: (номер строки, токены)."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise SpecError(f"Строка {lineno}: ожидались целые числа, получено {' '.join(tokens)!r}") from None


def _header(rows: Iterator[tuple[int, list[str]]], keyword: str) -> tuple[int, int]:
    try:
        lineno, tokens = next(rows)
    except StopIteration:
        raise SpecError(f"Пустой файл: нет заголовка '{keyword} ...'") from None
    if len(tokens) != 3 or tokens[0] != keyword:
        raise SpecError(f"Строка {lineno}: ожидался заголовок '{keyword} <a> <b>'")
    a, b = _ints(tokens[1:], lineno)
    return a, b


def parse_digraph(data: bytes | str) -> Digraph:
    """
    Формат:
        digraph <n> <m>
        <tail> <head>      (m строк)
    Строки с '#' считаются комментариями. Порядок строк задаёт индексы дуг.
    """
    rows = _rows(_decode(data))
    n, m = _header(rows, "digraph")
    arcs: list[tuple[int, int]] = []
    for lineno, tokens in rows:
        if len(tokens) != 2:
            raise SpecError(f"Строка {lineno}: дуга записывается как '<tail> <head>'")
        tail, head = _ints(tokens, lineno)
        arcs.append((tail, head))
    if len(arcs) != m:
        raise SpecError(f"В заголовке m={m}, а дуг в файле {len(arcs)}")
    return Digraph(n=n, arcs=tuple(arcs))


def parse_coloring(data: bytes | str, D: Digraph) -> ArcColoring:
    """
    Формат:
        coloring <m> <c>
        <tail> <head> <color>   (m строк, в любом порядке)
    Каждая пара должна совпасть ровно с одной дугой D.
    """
    rows = _rows(_decode(data))
    m, c = _header(rows, "coloring")
    if m != D.m:
        raise SpecError(f"Раскраска на m={m} дуг, а в орграфе {D.m}")
    colors: list[int | None] = [None] * D.m
    for lineno, tokens in rows:
        if len(tokens) != 3:
            raise SpecError(f"Строка {lineno}: ожидалось '<tail> <head> <color>'")
        tail, head, color = _ints(tokens, lineno)
        if not D.has_arc(tail, head):
            raise SpecError(f"Строка {lineno}: дуги {tail}->{head} нет в орграфе")
        j = D.arc_index(tail, head)
        if colors[j] is not None:
            raise SpecError(f"Строка {lineno}: дуга {tail}->{head} покрашена повторно")
        colors[j] = color
    missing = [D.arcs[j] for j, x in enumerate(colors) if x is None]
    if missing:
        raise SpecError(f"Не покрашены дуги: {missing[:5]}")
    return ArcColoring(colors=tuple(colors), c=c)


def read_digraph(path: str | Path) -> Digraph:
    return parse_digraph(Path(path).read_bytes())


def read_coloring(path: str | Path, D: Digraph) -> ArcColoring:
    return parse_coloring(Path(path).read_bytes(), D)


def parse_int_list(value: str) -> list[int]:
    """'1,3' или '1;3' -> [1, 3] (как в --set и --parts)."""
    sep = ";" if ";" in value else ","
    try:
        return [int(x) for x in value.split(sep) if x.strip()]
    except ValueError:
        raise SpecError(f"Ожидался список целых через запятую, получено {value!r}") from None


def parse_arc_list(value: str) -> list[tuple[int, int]]:
    """'0-3,2-1' -> [(0, 3), (2, 1)] (для --missing)."""
    arcs: list[tuple[int, int]] = []
    for item in value.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            tail, head = (int(x) for x in item.split("-"))
        except ValueError:
            raise SpecError(f"Дуга записывается как 'tail-head', получено {item!r}") from None
        arcs.append((tail, head))
    return arcs
