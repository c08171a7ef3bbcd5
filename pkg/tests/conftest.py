import logging

import pytest

from digraph import biorient, circulant, cycle_edges, directed_cycle, path_edges


@pytest.fixture(autouse=True)
def _fresh_logging():
    # cli.main настраивает корневой логгер на текущий sys.stderr,
    # а capsys подменяет его в каждом тесте
    yield
    root = logging.getLogger()
    for handler in list(root.handlers):
        if type(handler) is logging.StreamHandler:
            root.removeHandler(handler)
    root.setLevel(logging.WARNING)
    if hasattr(root, "_logging_already_configured"):
        del root._logging_already_configured


@pytest.fixture
def bior_c5():
    return biorient(5, cycle_edges(5))


@pytest.fixture
def bior_p4():
    return biorient(4, path_edges(4))


@pytest.fixture
def dir_c4():
    return directed_cycle(4)


@pytest.fixture
def c5_12():
    return circulant(5, (1, 2))
