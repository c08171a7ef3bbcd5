import csv
import io
import json

import pytest
from openpyxl import load_workbook

import cli
from utils.parsing import read_coloring, read_digraph


def run(argv, capsys):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def _write(path, text):
    path.write_text(text, encoding="utf-8")
    return path


# ===== gen =====

def test_gen_circulant(tmp_path, capsys):
    out = tmp_path / "c9.txt"
    code, stdout, _ = run(["gen", "circulant", "--n", 9, "--set", "1,3", "-o", out], capsys)
    assert code == 0
    D = read_digraph(out)
    assert (D.n, D.m) == (9, 18)
    assert "m=18" in stdout


def test_gen_figure1_to_stdout(capsys):
    code, stdout, _ = run(["gen", "figure1", "--extra-arc"], capsys)
    assert code == 0
    assert "digraph 13 25" in stdout


def test_summary_goes_to_stderr_when_writing_stdout(capsys):
    code, stdout, err = run(["gen", "circulant", "--n", 9, "--set", "1,3"], capsys)
    assert code == 0
    assert "digraph 9 18" in stdout
    assert "n=9 m=18 strong=True" in err
    code, stdout, err = run(["color", "interval", "--n", 6, "--k", 2], capsys)
    assert code == 0
    assert "coloring 12 3" in stdout
    assert "Цветов: 3 (прогноз: 3)" in err


def test_gen_star_and_subcycle(tmp_path, capsys):
    star = tmp_path / "star.txt"
    assert run(["gen", "biorient-star", "--n", 3, "-o", star], capsys)[0] == 0
    assert read_digraph(star).m == 6
    sub = tmp_path / "sub.txt"
    assert run(["gen", "subcycle", "--n", 4, "--missing", "0-3", "-o", sub], capsys)[0] == 0
    assert read_digraph(sub).m == 7
    parts = tmp_path / "k22.txt"
    assert run(["gen", "biorient-multipartite", "--parts", "2,2", "-o", parts], capsys)[0] == 0
    assert read_digraph(parts).m == 8


@pytest.mark.parametrize("argv", [
    ["gen", "circulant", "--n", 9],
    ["gen", "circulant", "--n", 4, "--set", "1,4"],
    ["gen", "wheel", "--n", 4],
    ["gen"],
])
def test_gen_bad_params(argv, capsys):
    assert run(argv, capsys)[0] == 2


# ===== color / verify =====

@pytest.mark.parametrize("argv, colors", [
    (["color", "interval", "--n", 6, "--k", 2], 3),
    (["color", "square", "--k", 4], 4),
    (["color", "multiple", "--k", 3, "--a", 3], 4),
    (["color", "c2k", "--k", 3, "--variant", "k+1"], 3),
    (["color", "cycle", "--n", 7], 4),
    (["color", "figure1"], 7),
])
def test_color_then_verify(argv, colors, tmp_path, capsys):
    graph, coloring = tmp_path / "g.txt", tmp_path / "c.txt"
    code, stdout, _ = run(argv + ["--graph-out", graph, "-o", coloring], capsys)
    assert code == 0
    assert f"{colors} цветов" in stdout
    D = read_digraph(graph)
    assert read_coloring(coloring, D).c == colors
    assert run(["verify", graph, coloring, "--mode", "strong"], capsys)[0] == 0


def test_color_subcycle_verifies_rainbow(tmp_path, capsys):
    graph, coloring = tmp_path / "g.txt", tmp_path / "c.txt"
    argv = ["color", "subcycle", "--n", 5, "--missing", "0-4,2-1", "--graph-out", graph, "-o", coloring]
    assert run(argv, capsys)[0] == 0
    assert run(["verify", graph, coloring, "--mode", "rainbow"], capsys)[0] == 0


def test_color_hypothesis_violation(capsys):
    code, _, err = run(["color", "interval", "--n", 5, "--k", 4], capsys)
    assert code == 2
    assert "1 <= k <= n-2" in err


def test_color_refusal(capsys):
    code, _, err = run(["color", "subcycle", "--n", 4, "--missing", "1-0,2-1,3-2"], capsys)
    assert code == 2
    assert "rc*=src*=4" in err


def test_verify_failure_lists_pairs(tmp_path, capsys):
    graph = _write(tmp_path / "g.txt", "digraph 4 4\n0 1\n1 2\n2 3\n3 0\n")
    coloring = _write(tmp_path / "c.txt", "coloring 4 3\n0 1 1\n1 2 2\n2 3 3\n3 0 1\n")
    code, stdout, _ = run(["verify", graph, coloring, "--mode", "rainbow"], capsys)
    assert code == 1
    assert "3 -> 1" in stdout


def test_verify_json(tmp_path, capsys):
    graph, coloring = tmp_path / "g.txt", tmp_path / "c.txt"
    run(["color", "interval", "--n", 6, "--k", 2, "--graph-out", graph, "-o", coloring], capsys)
    code, stdout, _ = run(["verify", graph, coloring, "--json", "--witnesses"], capsys)
    assert code == 0
    report = json.loads(stdout)
    assert report["verdict"] is True
    assert report["mode"] == "strong"
    assert report["pairs_checked"] == 30
    assert report["witnesses"]["0->3"][0] == 0


def test_verify_color_zero_is_input_error(tmp_path, capsys):
    graph = _write(tmp_path / "g.txt", "digraph 2 2\n0 1\n1 0\n")
    coloring = _write(tmp_path / "c.txt", "coloring 2 1\n0 1 0\n1 0 1\n")
    assert run(["verify", graph, coloring], capsys)[0] == 2


def test_verify_arc_mismatch(tmp_path, capsys):
    graph = _write(tmp_path / "g.txt", "digraph 3 3\n0 1\n1 2\n2 0\n")
    coloring = _write(tmp_path / "c.txt", "coloring 3 1\n0 1 1\n1 2 1\n0 2 1\n")
    assert run(["verify", graph, coloring], capsys)[0] == 2


def test_verify_missing_file(tmp_path, capsys):
    assert run(["verify", tmp_path / "nope.txt", tmp_path / "c.txt"], capsys)[0] == 2


# ===== solve =====

def _gen(tmp_path, capsys, *argv):
    path = tmp_path / "g.txt"
    assert run(["gen", *argv, "-o", path], capsys)[0] == 0
    return path


def test_solve_directed_c5(tmp_path, capsys):
    graph = _gen(tmp_path, capsys, "dircycle", "--n", 5)
    code, stdout, _ = run(["solve", graph, "--target", "rc"], capsys)
    assert code == 0
    result = json.loads(stdout)
    assert result["value"] == 5
    assert result["status"] == "exact"
    assert result["certificate"]["c"] == 5


def test_solve_bior_c4(tmp_path, capsys):
    graph = _gen(tmp_path, capsys, "biorient-cycle", "--n", 4)
    code, stdout, _ = run(["solve", graph, "--target", "src"], capsys)
    assert code == 0
    assert json.loads(stdout)["value"] == 2


def test_solve_budget_exit_code(tmp_path, capsys):
    graph = _gen(tmp_path, capsys, "circulant", "--n", 6, "--set", "1,3")
    code, stdout, _ = run(["solve", graph, "--budget", 1], capsys)
    assert code == 3
    result = json.loads(stdout)
    assert result["status"] == "budget-exceeded"
    assert result["lower"] == 3
    assert result["upper"] >= 3
    assert "value" not in result


def test_solve_not_strong(tmp_path, capsys):
    graph = _write(tmp_path / "g.txt", "digraph 3 2\n0 1\n1 2\n")
    assert run(["solve", graph], capsys)[0] == 2


# ===== predict / distance =====

def test_predict_json(capsys):
    code, stdout, _ = run(["predict", "interval", "--n", 6, "--k", 2, "--json"], capsys)
    assert code == 0
    pv = json.loads(stdout)
    assert (pv["rc"], pv["src"], pv["applicable"]) == (3, 3, True)


def test_predict_text_and_inapplicable(capsys):
    code, stdout, _ = run(["predict", "circulant", "--n", 5, "--set", "1,3"], capsys)
    assert code == 0 and "rc*=3" in stdout
    code, stdout, _ = run(["predict", "cycle", "--n", 3], capsys)
    assert code == 0 and "неприменима" in stdout
    code, stdout, _ = run(["predict", "dircycle", "--n", 4], capsys)
    assert "rc*=4" in stdout


def test_distance(capsys):
    code, stdout, _ = run(["distance", "--n", 9, "--k", 3], capsys)
    assert code == 0
    assert "diam: формула 4, BFS 4" in stdout
    code, stdout, _ = run(["distance", "--n", 9, "--k", 3, "--i", 5], capsys)
    assert code == 0 and "i=5: формула 3, BFS 3" in stdout
    assert run(["distance", "--n", 5, "--k", 4], capsys)[0] == 2


# ===== report =====

def _rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_report_interval(tmp_path, capsys):
    out = tmp_path / "interval.csv"
    code, _, _ = run(["report", "--family", "interval", "--max", 6, "-o", out], capsys)
    assert code == 0
    rows = _rows(out.read_text(encoding="utf-8"))
    assert len(rows) == sum(n - 2 for n in range(3, 7))
    assert all(row["agree"] == "True" for row in rows)
    for row in rows:
        n, k = (int(part.split("=")[1]) for part in row["params"].split())
        assert row["predicted_rc"] == row["predicted_src"] == str(-(-n // k))
    solved = [row for row in rows if row["solver_rc"]]
    assert solved
    for row in solved:
        assert row["solver_rc"] == row["predicted_rc"]
        assert row["solver_src"] == row["predicted_src"]


def test_report_is_deterministic(tmp_path, capsys):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    run(["report", "--family", "c2k", "--min", 2, "--max", 5, "-o", first], capsys)
    run(["report", "--family", "c2k", "--min", 2, "--max", 5, "-o", second], capsys)
    assert first.read_bytes() == second.read_bytes()
    assert all(row["agree"] == "True" for row in _rows(first.read_text(encoding="utf-8")))


def test_report_diameter_to_stdout(capsys):
    code, stdout, _ = run(["report", "--family", "diameter", "--max", 40], capsys)
    assert code == 0
    rows = _rows(stdout)
    assert rows and all(row["agree"] == "True" for row in rows)


@pytest.mark.parametrize("family, hi", [("square", 5), ("multiple", 4), ("path", 8), ("cycle", 8), ("star", 6), ("dircycle", 6)])
def test_report_families(family, hi, capsys):
    code, stdout, _ = run(["report", "--family", family, "--max", hi], capsys)
    assert code == 0
    assert all(row["agree"] == "True" for row in _rows(stdout))


def test_report_xlsx(tmp_path, capsys):
    xlsx = tmp_path / "square.xlsx"
    code, stdout, _ = run(["report", "--family", "square", "--min", 3, "--max", 4, "--xlsx", xlsx], capsys)
    assert code == 0
    ws = load_workbook(xlsx).active
    assert [c.value for c in ws[1]][:4] == ["family", "params", "predicted_rc", "predicted_src"]
    assert ws.max_row == 1 + len(_rows(stdout))


@pytest.mark.slow
def test_report_interval_full(capsys):
    code, stdout, _ = run(["report", "--family", "interval", "--max", 10], capsys)
    assert code == 0
    assert all(row["agree"] == "True" for row in _rows(stdout))


def test_verbose_flag(capsys):
    assert run(["-v", "predict", "complete", "--n", 3], capsys)[0] == 0
