import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from digraph import Digraph, complete_biorientation, directed_cycle, path_edges
from errors import CapacityError, NotStronglyConnectedError, SpecError
from models import ArcColoring, Mode
from rainbow import (
    exists_rainbow_geodesic,
    exists_rainbow_path,
    is_rainbow_connected,
    is_strong_rainbow_connected,
    lift_edge_coloring,
    validate_witness,
    verify,
)
from strategies import colored, is_rainbow, strong_digraphs, to_networkx


def _c5_two_ones(D):
    # v0v1 и v1v2 одного цвета, остальные дуги разных
    colors, fresh = [], 2
    for arc in D.arcs:
        if arc in ((0, 1), (1, 2)):
            colors.append(1)
        else:
            colors.append(fresh)
            fresh += 1
    return ArcColoring.from_colors(colors)


def test_unique_geodesic_with_repeated_color(bior_c5):
    col = _c5_two_ones(bior_c5)
    assert exists_rainbow_geodesic(bior_c5, col, 0, 2) is None
    assert exists_rainbow_path(bior_c5, col, 0, 2) == (0, 4, 3, 2)
    report = is_strong_rainbow_connected(bior_c5, col)
    assert not report.verdict
    assert (0, 2) in report.failures
    assert is_rainbow_connected(bior_c5, col).verdict


def test_direct_arc_and_same_vertex(dir_c4):
    col = ArcColoring(colors=(1, 1, 1, 1), c=1)
    assert exists_rainbow_path(dir_c4, col, 1, 2) == (1, 2)
    assert exists_rainbow_geodesic(dir_c4, col, 3, 3) == (3,)


def test_directed_c4_with_three_colors_fails(dir_c4):
    col = ArcColoring(colors=(1, 2, 3, 1), c=3)
    report = is_rainbow_connected(dir_c4, col)
    assert not report.verdict
    assert set(report.failures) == {(3, 1), (3, 2), (2, 1)}
    assert report.pairs_checked == 12


def test_complete_biorientation_one_color():
    D = complete_biorientation(4)
    col = ArcColoring(colors=(1,) * D.m, c=1)
    assert is_strong_rainbow_connected(D, col).verdict


def test_lifted_path_coloring(bior_p4):
    D, col = lift_edge_coloring(4, path_edges(4), [1, 2, 3])
    assert D == bior_p4
    assert col.colors == (1, 1, 2, 2, 3, 3)
    assert is_strong_rainbow_connected(D, col).verdict
    with pytest.raises(SpecError):
        lift_edge_coloring(4, path_edges(4), [1, 2])


def test_input_errors(dir_c4):
    with pytest.raises(SpecError):
        is_rainbow_connected(dir_c4, ArcColoring(colors=(1, 2, 3), c=3))
    with pytest.raises(CapacityError):
        is_rainbow_connected(dir_c4, ArcColoring(colors=(1, 2, 3, 4), c=65))
    with pytest.raises(NotStronglyConnectedError):
        is_rainbow_connected(Digraph(n=2, arcs=((0, 1),)), ArcColoring(colors=(1,), c=1))
    with pytest.raises(ValueError):
        ArcColoring(colors=(0, 1), c=2)


def test_witnesses_revalidate(c5_12):
    col = ArcColoring(colors=(1, 2, 3, 1, 2, 1, 2, 3, 1, 2), c=3)
    for mode in Mode:
        report = verify(c5_12, col, mode, want_witnesses=True)
        for key, path in (report.witnesses or {}).items():
            u, v = (int(x) for x in key.split("->"))
            assert (path[0], path[-1]) == (u, v)
            assert validate_witness(c5_12, col, path, geodesic=mode == Mode.STRONG)


def test_validate_witness_rejects_bad_paths(dir_c4):
    col = ArcColoring(colors=(1, 2, 1, 2), c=2)
    assert not validate_witness(dir_c4, col, (0, 1, 2, 3))
    assert not validate_witness(dir_c4, col, (0, 2))
    assert not validate_witness(dir_c4, col, ())
    assert validate_witness(dir_c4, col, (1, 2))
    # путь длины 2 при d=1 не геодезический
    D = complete_biorientation(3)
    distinct = ArcColoring.from_colors(range(1, D.m + 1))
    assert validate_witness(D, distinct, (0, 1, 2))
    assert not validate_witness(D, distinct, (0, 1, 2), geodesic=True)


# ===== Сравнение с полным перебором путей =====

@settings(max_examples=500, deadline=None)
@given(colored(strong_digraphs(max_n=6), max_colors=4))
def test_path_search_matches_brute_force(data):
    D, col = data
    G = to_networkx(D)
    for u in range(D.n):
        for v in range(D.n):
            if u == v:
                continue
            expected = any(is_rainbow(D, col, p) for p in nx.all_simple_paths(G, u, v))
            found = exists_rainbow_path(D, col, u, v)
            assert (found is not None) == expected
            if found is not None:
                assert validate_witness(D, col, found)


@settings(max_examples=500, deadline=None)
@given(colored(strong_digraphs(max_n=6), max_colors=4))
def test_geodesic_search_matches_brute_force(data):
    D, col = data
    G = to_networkx(D)
    for u in range(D.n):
        for v in range(D.n):
            if u == v:
                continue
            expected = any(is_rainbow(D, col, p) for p in nx.all_shortest_paths(G, u, v))
            found = exists_rainbow_geodesic(D, col, u, v)
            assert (found is not None) == expected
            if found is not None:
                assert validate_witness(D, col, found, geodesic=True)


@settings(max_examples=60, deadline=None)
@given(colored(strong_digraphs(max_n=5), max_colors=3))
def test_strong_implies_rainbow(data):
    D, col = data
    if is_strong_rainbow_connected(D, col).verdict:
        assert is_rainbow_connected(D, col).verdict


@settings(max_examples=60, deadline=None)
@given(colored(strong_digraphs(max_n=5), max_colors=3), st.data())
def test_refining_a_color_keeps_connectivity(data, draw):
    D, col = data
    j = draw.draw(st.integers(0, D.m - 1))
    refined = list(col.colors)
    refined[j] = col.c + 1
    finer = ArcColoring(colors=tuple(refined), c=col.c + 1)
    for mode in Mode:
        if verify(D, col, mode).verdict:
            assert verify(D, finer, mode).verdict


@settings(max_examples=30, deadline=None)
@given(colored(strong_digraphs(max_n=6), max_colors=4))
def test_workers_do_not_change_report(data):
    D, col = data
    for mode in Mode:
        assert verify(D, col, mode, want_witnesses=True, workers=4) == verify(D, col, mode, want_witnesses=True)


def test_all_distinct_colors_always_work():
    D = directed_cycle(6)
    col = ArcColoring.from_colors(range(1, D.m + 1))
    assert is_strong_rainbow_connected(D, col).verdict
    assert col.used == 6
