import sys
from pathlib import Path

import pytest

from dsrw import parse_graph, parse_rules

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load_graph(name: str):
    return parse_graph((FIXTURES / name).read_text())


def load_rules(name: str):
    return parse_rules((FIXTURES / name).read_text())


@pytest.fixture
def sample_graph():
    return load_graph("sample_graph.graph")


@pytest.fixture
def sample_pattern():
    return load_graph("sample_pattern.graph")


@pytest.fixture
def pattern_hom(sample_graph, sample_pattern):
    from dsrw import check_homomorphism

    return check_homomorphism(sample_pattern, sample_graph, {"a": "m", "b": "n", "c": "o", "d": "n", "e": "p"})


@pytest.fixture
def add_one_cell():
    return load_rules("add_one_cell.rules").rule("add1")


@pytest.fixture
def add_cyclic():
    return load_rules("add_cyclic.rules").rule("add2")


@pytest.fixture
def cyclic_host():
    return load_graph("add_cyclic_host.graph")


@pytest.fixture
def cyclic_result():
    return load_graph("add_cyclic_result.graph")


@pytest.fixture
def length_system():
    return load_rules("length.rules")


def circular_list(k: int, root: str = "r"):
    """``#`` applied to a k-cell circular list of constants."""
    from dsrw import Graph

    labels = {root: "#"}
    succ = {root: ("c1",)}
    for i in range(1, k + 1):
        labels[f"c{i}"] = "cons"
        succ[f"c{i}"] = (f"v{i}", f"c{i % k + 1}")
        labels[f"v{i}"] = "a"
        succ[f"v{i}"] = ()
    return Graph(labels, labels, succ)


def succ_chain(k: int):
    from dsrw import Graph

    labels = {"s0": "0"}
    succ = {"s0": ()}
    for i in range(1, k + 1):
        labels[f"s{i}"] = "succ"
        succ[f"s{i}"] = (f"s{i - 1}",)
    return Graph(labels, labels, succ)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n][1])
