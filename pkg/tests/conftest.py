import itertools
import random

import networkx as nx
import pytest

from topcoding.graph import Graph
from topcoding.labelings import Labeling
from topcoding.topcode import TopcodeMatrix


GOLDEN = TopcodeMatrix.from_rows(
    (10, 7, 0, 0, 2, 2, 0),
    (1, 3, 5, 7, 9, 11, 13),
    (11, 10, 5, 7, 11, 13, 13),
)

A6 = TopcodeMatrix.from_rows(
    (7, 5, 7, 1, 5, 1, 1, 1, 1),
    (1, 3, 5, 7, 9, 11, 13, 15, 17),
    (18, 18, 14, 18, 12, 14, 12, 10, 8),
)


def a6_tree() -> tuple[Graph, Labeling]:
    """A 10-vertex tree whose total coloring has the A(6) columns.

    Values 7 and 1 appear on two vertices each, so this is a coloring.
    """
    names = ["7a", "7b", "5", "1a", "1b", "18", "14", "12", "10", "8"]
    colors = (7, 7, 5, 1, 1, 18, 14, 12, 10, 8)
    edges = ((0, 5), (2, 5), (1, 6), (3, 5), (2, 7), (3, 6), (4, 7), (4, 8), (4, 9))
    G = Graph(10, edges, names)
    return G, Labeling(colors, (1, 3, 5, 7, 9, 11, 13, 15, 17))


def from_nx(H) -> Graph:
    H = nx.convert_node_labels_to_integers(H)
    return Graph(H.number_of_nodes(), tuple(sorted(tuple(sorted(e)) for e in H.edges())))


def random_tree(rng: random.Random, n: int) -> Graph:
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, ((0, 1),))
    code = [rng.randrange(n) for _ in range(n - 2)]
    return from_nx(nx.from_prufer_sequence(code))


def random_caterpillar(rng: random.Random, p: int) -> Graph:
    """A spine path with the remaining vertices hung on spine vertices."""
    spine = rng.randint(1, max(1, p - 1)) if p > 1 else 1
    edges = [(i, i + 1) for i in range(spine - 1)]
    for v in range(spine, p):
        edges.append((rng.randrange(spine), v))
    return Graph(p, tuple(edges))


def is_caterpillar(G: Graph) -> bool:
    inner = [v for v in range(G.p) if G.degree(v) > 1]
    H = Graph(G.p, tuple(e for e in G.edges if e[0] in inner and e[1] in inner))
    return G.is_tree() and all(H.degree(v) <= 2 for v in inner)


def all_graphs(n: int):
    """Every labeled simple graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(e for b, e in enumerate(pairs) if mask >> b & 1))


# ---------------------------------------------------------------------------
# acceptance summary

def pytest_configure(config):
    config._acceptance = {}


@pytest.fixture
def record(request):
    """record(n, ok, seconds, detail) stores one acceptance line."""
    table = request.config._acceptance

    def _record(n: int, ok: bool, seconds: float, detail: str = ""):
        table[n] = (ok, seconds, detail)
        print(_line(n, ok, seconds, detail))

    return _record


def _line(n, ok, seconds, detail):
    tail = f" {detail}" if detail else ""
    return f"criterion {n:2d}: {'PASS' if ok else 'FAIL'} ({seconds:.3f}s){tail}"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    table = getattr(config, "_acceptance", {})
    if not table:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(table):
        terminalreporter.write_line(_line(n, *table[n]))
