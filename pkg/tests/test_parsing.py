import pytest
from openpyxl import load_workbook

import constructions as cons
from digraph import circulant, figure1_digraph
from errors import SpecError
from models import ArcColoring
from utils.files import coloring_payload, format_coloring, format_digraph, rows_to_csv, write_xlsx
from utils.parsing import parse_arc_list, parse_coloring, parse_digraph, parse_int_list


@pytest.mark.parametrize("D", [circulant(9, (1, 3)), figure1_digraph(True), circulant(2, (1,))])
def test_digraph_text_round_trip(D):
    assert parse_digraph(format_digraph(D, comment="x")) == D


def test_digraph_comments_bom_and_blank_lines():
    text = "\ufeff# заголовок\n\ndigraph 3 3\n0 1\n# середина\n1 2\n2 0\n"
    D = parse_digraph(text.encode("utf-8"))
    assert D.arcs == ((0, 1), (1, 2), (2, 0))


@pytest.mark.parametrize("text", [
    "",
    "graph 3 1\n0 1\n",
    "digraph 3 2\n0 1\n",
    "digraph 3 1\n0 1 2\n",
    "digraph 3 1\n0 x\n",
])
def test_digraph_format_errors(text):
    with pytest.raises(SpecError):
        parse_digraph(text)


@pytest.mark.parametrize("text", ["digraph 3 1\n0 0\n", "digraph 3 2\n0 1\n0 1\n", "digraph 2 1\n0 5\n"])
def test_digraph_content_errors(text):
    with pytest.raises(ValueError):
        parse_digraph(text)


def test_coloring_round_trip_and_any_order():
    D, col = cons.color_circulant_interval(6, 2)
    assert parse_coloring(format_coloring(D, col), D) == col
    lines = format_coloring(D, col).splitlines()
    shuffled = "\n".join([lines[0]] + list(reversed(lines[1:])))
    assert parse_coloring(shuffled, D) == col


def test_coloring_payload():
    D, col = cons.color_directed_cycle(3)
    assert coloring_payload(D, col) == {"m": 3, "c": 3, "arcs": [[0, 1, 1], [1, 2, 2], [2, 0, 3]]}


@pytest.mark.parametrize("body", [
    "coloring 3 3\n0 1 1\n1 2 2\n",            # не все дуги
    "coloring 3 3\n0 1 1\n1 2 2\n1 0 3\n",     # нет такой дуги
    "coloring 3 3\n0 1 1\n0 1 2\n2 0 3\n",     # дуга дважды
    "coloring 4 3\n0 1 1\n1 2 2\n2 0 3\n",     # m не совпадает
    "coloring 3 3\n0 1 1\n1 2\n2 0 3\n",
])
def test_coloring_spec_errors(body):
    D, _ = cons.color_directed_cycle(3)
    with pytest.raises(SpecError):
        parse_coloring(body, D)


def test_coloring_color_out_of_palette():
    D, _ = cons.color_directed_cycle(3)
    with pytest.raises(ValueError):
        parse_coloring("coloring 3 3\n0 1 0\n1 2 2\n2 0 3\n", D)
    with pytest.raises(ValueError):
        parse_coloring("coloring 3 2\n0 1 1\n1 2 2\n2 0 3\n", D)


def test_list_options():
    assert parse_int_list("1,3") == [1, 3]
    assert parse_int_list("2;2;1") == [2, 2, 1]
    assert parse_arc_list("0-3, 2-1") == [(0, 3), (2, 1)]
    with pytest.raises(SpecError):
        parse_int_list("1,a")
    with pytest.raises(SpecError):
        parse_arc_list("0-1-2")


def test_csv_and_xlsx(tmp_path):
    header = ("family", "agree")
    rows = [("interval", True), ("c2k", False)]
    assert rows_to_csv(header, rows) == "family,agree\ninterval,True\nc2k,False\n"
    path = write_xlsx(tmp_path / "out" / "r.xlsx", header, rows, title="interval")
    ws = load_workbook(path).active
    assert ws.title == "interval"
    assert [c.value for c in ws[1]] == ["family", "agree"]
    assert ws.max_row == 3


def test_arc_coloring_helpers():
    col = ArcColoring(colors=(1, 3, 3), c=4)
    assert len(col) == 3 and col[1] == 3 and col.used == 2
