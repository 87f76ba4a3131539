import json
import random

import pytest

from topcoding.graph import Graph, cycle_graph, disjoint_union, path_graph, star_graph
from topcoding.labelings import EdgeRule, Labeling, VerifierSpec, verify
from topcoding.solver import search
from topcoding.topcode import (
    ROUTES, VARIANTS, Tag, TopcodeError, TopcodeMatrix, analyze, classify, count_segmentations,
    emit_cells, emit_string, from_labeled_graph, partition_string, route_cells, segmentations,
    tag_names, to_labeled_graph, union,
)

from conftest import A6, GOLDEN, a6_tree

ONE = TopcodeMatrix.from_rows((0,), (1,), (1,))


# ---------------------------------------------------------------------------
# the matrix type

def test_rows_and_columns():
    assert GOLDEN.q == 7
    assert GOLDEN.E == (1, 3, 5, 7, 9, 11, 13)
    assert GOLDEN.columns()[0] == (10, 1, 11)
    assert GOLDEN.vertex_values() == sorted(set(GOLDEN.X) | set(GOLDEN.Y))
    with pytest.raises(TopcodeError):
        TopcodeMatrix.from_rows((0, 1), (1,), (1,))
    with pytest.raises(TopcodeError):
        TopcodeMatrix.from_rows((-1,), (1,), (1,))


def test_json_round_trip():
    doc = json.loads(json.dumps(GOLDEN.to_json()))
    assert TopcodeMatrix.from_json(doc) == GOLDEN
    with pytest.raises(TopcodeError):
        TopcodeMatrix.from_json({"X": [1]})


def test_evaluated_flag():
    T = TopcodeMatrix.from_rows((0, 1), (1, 1), (1, 2), rule=EdgeRule("abs-diff"))
    assert T.evaluated
    assert not TopcodeMatrix.from_rows((0,), (2,), (1,), rule=EdgeRule("abs-diff")).evaluated
    assert not ONE.evaluated


# ---------------------------------------------------------------------------
# construction

def test_from_labeled_graph_golden():
    G, f = to_labeled_graph(GOLDEN)
    assert (G.p, G.q) == (7, 7)
    assert verify(G, Labeling(f.vertex), VerifierSpec("odd-graceful")).passed
    assert from_labeled_graph(G, Labeling(f.vertex)) == GOLDEN
    assert from_labeled_graph(G, f) == GOLDEN


def test_from_labeled_graph_k2():
    T = from_labeled_graph(Graph(2, ((0, 1),)), Labeling((0, 1)))
    assert T == ONE


def test_from_labeled_graph_a6():
    G, f = a6_tree()
    assert from_labeled_graph(G, f).same_columns(A6)


def test_column_order_and_set_ordered_orientation():
    f = Labeling((0, 3, 1, 2))
    T = from_labeled_graph(path_graph(4), f)
    assert T.E == (1, 2, 3)
    assert T.columns() == [(1, 1, 2), (1, 2, 3), (0, 3, 3)]
    S = from_labeled_graph(path_graph(4), f, VerifierSpec("set-ordered-graceful"))
    assert max(S.X) < min(S.Y)


def test_from_labeled_graph_rules():
    G = path_graph(3)
    T = from_labeled_graph(G, Labeling((0, 2, 1)), VerifierSpec("harmonious"))
    assert sorted(T.E) == [0, 1]
    with pytest.raises(TopcodeError):
        from_labeled_graph(G, Labeling((0, 1)))
    with pytest.raises(TopcodeError):
        from_labeled_graph(cycle_graph(3), Labeling((0, 1, 3)), VerifierSpec("set-ordered-graceful"))


# ---------------------------------------------------------------------------
# classification

def test_classify_golden():
    assert classify(GOLDEN) == {Tag("odd-graceful")}


def test_classify_a6():
    assert classify(A6) == {Tag("edge-magic-total", 26)}
    assert all(x + e + y == 26 for x, e, y in A6.columns())


def test_classify_single_column():
    names = tag_names(classify(ONE))
    assert {"graceful", "odd-graceful", "set-ordered-graceful"} <= names
    assert len(names) > 3
    assert classify(TopcodeMatrix.empty()) == set()


def test_tag_str():
    assert str(Tag("edge-magic-total", 26)) == "edge-magic-total(26)"
    assert str(Tag("graceful")) == "graceful"


@pytest.mark.parametrize("kind", ["graceful", "odd-graceful", "set-ordered-graceful", "edge-magic-total"])
def test_classify_agrees_with_verify(kind):
    spec = VerifierSpec(kind)
    for G in (path_graph(3), path_graph(4), star_graph(3), cycle_graph(4)):
        for f in search(G, spec, limit=20):
            assert kind in tag_names(classify(from_labeled_graph(G, f, spec)))


# ---------------------------------------------------------------------------
# structure

def test_analyze_cycle():
    rep = analyze(from_labeled_graph(cycle_graph(3), Labeling((0, 1, 3))))
    assert rep.connected and rep.euler and rep.hamilton
    assert rep.perfect_matching is None


def test_analyze_path():
    rep = analyze(from_labeled_graph(path_graph(3), Labeling((0, 2, 1))))
    assert rep.connected and not rep.euler and rep.hamilton is False
    rep = analyze(from_labeled_graph(path_graph(4), Labeling((0, 3, 1, 2))))
    assert rep.perfect_matching is not None and len(rep.perfect_matching) == 2


def test_analyze_union_is_disconnected():
    T = union(ONE, TopcodeMatrix.from_rows((5,), (1,), (6,)))
    rep = analyze(T)
    assert not rep.connected and not rep.euler
    assert json.loads(json.dumps(rep.to_json()))["connected"] is False


# ---------------------------------------------------------------------------
# union

def test_union_identity_and_order():
    E = TopcodeMatrix.empty()
    assert union(GOLDEN, E) == GOLDEN and union(E, GOLDEN) == GOLDEN
    two = union(ONE, TopcodeMatrix.from_rows((2,), (3,), (5,)))
    assert two.columns() == [(0, 1, 1), (2, 3, 5)]


def test_union_associative():
    a, b, c = ONE, GOLDEN, A6
    assert union(union(a, b), c) == union(a, union(b, c))


def test_union_matches_disjoint_graph():
    G1, f1 = path_graph(3), Labeling((0, 2, 1))
    G2, f2 = Graph(2, ((0, 1),)), Labeling((5, 9))
    G, _ = disjoint_union([G1, G2])
    T = from_labeled_graph(G, Labeling(f1.vertex + f2.vertex))
    assert T.same_columns(union(from_labeled_graph(G1, f1), from_labeled_graph(G2, f2)))


# ---------------------------------------------------------------------------
# strings

def test_golden_strings():
    assert emit_string(GOLDEN, "O1") == "10700220131197531111057111313"
    assert emit_string(GOLDEN, "O2") == "10111103705577029111311201313"
    assert emit_string(ONE) == "011"


@pytest.mark.parametrize("route", ROUTES)
@pytest.mark.parametrize("q", range(1, 9))
def test_routes_visit_every_cell_once(route, q):
    cells = route_cells(q, route)
    assert sorted(cells) == sorted((r, i) for r in "xey" for i in range(1, q + 1))


def test_o3_prefix():
    assert route_cells(4, "O3")[:4] == [("y", 2), ("y", 1), ("e", 1), ("x", 1)]


def test_variants():
    T = TopcodeMatrix.from_rows((1, 2), (3, 4), (5, 6))
    assert emit_cells(T, "O1") == [1, 2, 4, 3, 5, 6]
    assert emit_cells(T, "O1", "reciprocal") == [5, 6, 4, 3, 1, 2]
    assert emit_cells(T, "O1", "inverse") == [2, 1, 3, 4, 6, 5]
    assert emit_cells(T, "O4") == [1, 3, 5, 2, 4, 6]
    for v in VARIANTS:
        assert emit_string(T, "O2", v) == emit_string(T, "O2", v)
    with pytest.raises(TopcodeError):
        emit_string(T, "O9")
    with pytest.raises(TopcodeError):
        emit_string(T, "O1", "mirror")


def test_permutation_route():
    T = TopcodeMatrix.from_rows((1, 2), (3, 4), (5, 6))
    assert emit_cells(T, [5, 4, 3, 2, 1, 0]) == [6, 5, 4, 3, 2, 1]
    assert emit_cells(T, [0, 1, 2, 3, 4, 5]) == [1, 2, 3, 4, 5, 6]
    with pytest.raises(TopcodeError):
        emit_cells(T, [0, 0, 1, 2, 3, 4])


# ---------------------------------------------------------------------------
# partition

def brute_cuts(s, n):
    if n == 0:
        return [[]] if not s else []
    out = []
    for k in range(1, len(s) + 1):
        head = s[:k]
        if len(head) > 1 and head[0] == "0":
            break
        out += [[int(head)] + rest for rest in brute_cuts(s[k:], n - 1)]
    return out


@pytest.mark.parametrize("s,n", [("011", 3), ("1020304", 3), ("100", 2), ("0000", 4), ("12345678", 5), ("00", 1)])
def test_segmentations_match_brute_force(s, n):
    got = segmentations(s, n).tolist()
    assert got == brute_cuts(s, n)
    assert count_segmentations(s, n) == len(got)


def test_partition_examples():
    found = partition_string("011", 1, kind="graceful")
    assert ONE in found
    assert len(partition_string("99", 1, kind="graceful")) == 0
    assert len(partition_string("99", 1)) == 0


def test_partition_round_trip_golden():
    found = partition_string(emit_string(GOLDEN), 7, kind="odd-graceful", cap=7)
    assert GOLDEN in found


def test_partition_results_are_distinct_and_re_emit():
    s = "1234567"
    found = partition_string(s, 2)
    assert len({tuple(T.data.ravel()) for T in found}) == len(found)
    assert all(emit_string(T) == s for T in found)


def test_partition_other_routes():
    rng = random.Random(7)
    for _ in range(20):
        q = rng.randint(1, 3)
        T = TopcodeMatrix.from_rows(*[[rng.randint(0, 30) for _ in range(q)] for _ in range(3)])
        for route in ROUTES:
            for v in VARIANTS:
                assert T in partition_string(emit_string(T, route, v), q, route=route, variant=v)


def test_partition_cap_and_input():
    with pytest.raises(TopcodeError, match="cap"):
        partition_string("1" * 18, 6)
    with pytest.raises(TopcodeError):
        partition_string("12a", 1)
    with pytest.raises(TopcodeError):
        partition_string("123", 0)
    with pytest.raises(TopcodeError, match="limit"):
        partition_string("1" * 40, 3, limit=10)


@pytest.mark.parametrize("kind", ["graceful", "odd-graceful", "set-ordered-graceful", "edge-magic-total", "harmonious"])
def test_partition_filter_matches_classify(kind):
    hits = 0
    for G in (path_graph(3), cycle_graph(3)):
        strings = {emit_string(from_labeled_graph(G, f, VerifierSpec(k)))
                   for k in ("graceful", "odd-graceful", "edge-magic-total", "harmonious")
                   for f in search(G, VerifierSpec(k))}
        for s in sorted(strings):
            want = [T for T in partition_string(s, G.q) if kind in tag_names(classify(T))]
            got = list(partition_string(s, G.q, kind=kind))
            assert got == want
            hits += len(got)
    assert hits > 0
