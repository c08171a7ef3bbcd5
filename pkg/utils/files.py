# utils/files.py
from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Iterable, Sequence

from openpyxl import Workbook

from digraph import Digraph
from models import ArcColoring


def format_digraph(D: Digraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"digraph {D.n} {D.m}")
    lines += [f"{tail} {head}" for tail, head in D.arcs]
    return "\n".join(lines) + "\n"


def format_coloring(D: Digraph, col: ArcColoring, comment: str | None = None) -> str:
    """Строки идут в порядке дуг D, хотя парсер принимает любой порядок."""
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"coloring {D.m} {col.c}")
    lines += [f"{tail} {head} {col[j]}" for j, (tail, head) in enumerate(D.arcs)]
    return "\n".join(lines) + "\n"


def coloring_payload(D: Digraph, col: ArcColoring) -> dict:
    """То же содержимое, что в файле раскраски, но для JSON."""
    return {
        "m": D.m,
        "c": col.c,
        "arcs": [[tail, head, col[j]] for j, (tail, head) in enumerate(D.arcs)],
    }


def write_text(path: str | Path, text: str) -> Path:
    path = Path(path)
    if path.parent != Path("."):
        path.parent.mkdir(parents=True, exist_ok=True)
    # newline="": одинаковые байты на любой ОС
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    return path


def rows_to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def write_xlsx(path: str | Path, header: Sequence[str], rows: Iterable[Sequence], title: str = "report") -> Path:
    path = Path(path)
    wb = Workbook()
    ws = wb.active
    ws.title = title[:31]
    ws.append(list(header))
    for row in rows:
        ws.append(list(row))
    # ширина колонок по самому длинному значению
    for column in ws.columns:
        width = max(len(str(cell.value)) if cell.value is not None else 0 for cell in column)
        ws.column_dimensions[column[0].column_letter].width = min(width + 2, 60)
    if path.parent != Path("."):
        path.parent.mkdir(parents=True, exist_ok=True)
    wb.save(path)
    return path
