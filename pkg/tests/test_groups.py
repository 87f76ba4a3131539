import json
import random

import pytest

from topcoding.graph import Graph, GraphError, cycle_graph, path_graph, star_graph
from topcoding.groups import (
    GraphicGroup, GroupError, add, build_group, check_axioms, encrypt_graph, inverse, subtract,
    tree_group_coloring,
)
from topcoding.labelings import Labeling, VerifierSpec
from topcoding.solver import find_labeling

from conftest import random_tree

K2 = Graph(2, ((0, 1),))


def test_k2_group():
    g = build_group(K2, Labeling((0, 1)), n=2)
    assert g.size == 2 and g.elements() == [1, 2]
    assert g.labeling(1) == (0, 1) and g.labeling(2) == (1, 0)


def test_translation_rule():
    G = path_graph(4)
    f = find_labeling(G, VerifierSpec("odd-graceful"))
    g = build_group(G, f, n=2 * G.q)
    for i in g.elements():
        assert g.labeling(i) == tuple((a + i - 1) % 6 for a in f.vertex)


def test_edge_mode_uses_induced_colors():
    g = build_group(path_graph(3), Labeling((0, 2, 1)), n=4, mode="edge")
    assert g.labeling(1) == (2, 1) and g.labeling(3) == (0, 3)


def test_mixed_mode():
    g = build_group(path_graph(3), Labeling((0, 2, 1)), mode="mixed", pmod=3, qmod=2)
    assert g.size == 6 and len(g.elements()) == 6
    assert g.labeling((2, 2)) == (1, 0, 2, 1, 0)
    assert add(g, (2, 1), (3, 2), (1, 1)) == (1, 2)
    assert check_axioms(g).passed
    with pytest.raises(GroupError):
        g.flat(3)


def test_build_errors():
    with pytest.raises(GroupError):
        build_group(K2, Labeling((0, 1)), n=0)
    with pytest.raises(GroupError):
        build_group(K2, Labeling((0, 1)), n=2, mode="face")
    with pytest.raises(GroupError):
        build_group(K2, Labeling((0, 1, 2)), n=2)


def test_arithmetic_examples():
    g = build_group(path_graph(5), Labeling((0, 7, 2, 5, 4)), n=8)
    assert add(g, 2, 3, 1) == 4
    assert inverse(g, 2, 1) == 8
    for i in g.elements():
        for k in g.elements():
            assert add(g, i, k, k) == i
            assert add(g, i, inverse(g, i, k), k) == k
            assert subtract(g, add(g, i, 5, k), 5, k) == i
    with pytest.raises(GroupError):
        add(g, 0, 1, 1)
    with pytest.raises(GroupError):
        add(g, 1, 9, 1)


def test_axioms_pass_on_built_groups():
    f = Labeling((0, 5, 2, 3))
    for n in (1, 2, 5, 6, 12):
        assert check_axioms(build_group(path_graph(4), f, n=n)).passed


def test_trivial_group():
    g = build_group(K2, Labeling((0, 1)), n=1)
    assert g.labeling(1) == (0, 0)
    rep = check_axioms(g)
    assert rep.passed and rep.literal_mismatches == 0


def test_perturbed_family_fails_label_identity():
    g = build_group(path_graph(3), Labeling((0, 3, 1)), n=4)
    bad = list(g.labels)
    bad[2] = (bad[2][0], (bad[2][1] + 1) % 4, bad[2][2])
    h = GraphicGroup(g.graph, g.base, g.mode, g.n, labels=tuple(bad), moduli=g.moduli)
    rep = check_axioms(h)
    assert not rep.passed and not rep.label_identity
    assert rep.closure and rep.associative
    assert ("label identity", 1) in rep.failures


def test_literal_rule_mismatches_are_counted():
    rep = check_axioms(build_group(path_graph(3), Labeling((0, 3, 1)), n=4))
    assert rep.passed and rep.literal_mismatches > 0
    doc = json.loads(json.dumps(rep.to_json()))
    assert doc["pass"] is True and doc["literalMismatches"] == rep.literal_mismatches


def test_axiom_limit():
    with pytest.raises(GroupError):
        check_axioms(build_group(K2, Labeling((0, 1)), n=65))


# ---------------------------------------------------------------------------
# tree coloring

def test_tree_coloring_k2():
    g = build_group(K2, Labeling((0, 1)), n=8)
    assert tree_group_coloring(K2, g, {(0, 1): 3}) == {0: 1, 1: 3}


def test_tree_coloring_star():
    g = build_group(star_graph(3), Labeling((0, 1, 2, 3)), n=6)
    F = tree_group_coloring(star_graph(3), g, {0: 2, 1: 3, 2: 4})
    assert F == {0: 1, 1: 2, 2: 3, 3: 4}


def test_tree_coloring_p3():
    G = path_graph(3)
    g = build_group(G, Labeling((0, 3, 1)), n=8)
    F = tree_group_coloring(G, g, {(0, 1): 2, (1, 2): 5})
    assert add(g, F[0], F[1], 1) == 2 and add(g, F[1], F[2], 1) == 5


def test_tree_coloring_other_zero_and_root():
    rng = random.Random(3)
    for _ in range(20):
        T = random_tree(rng, rng.randint(2, 9))
        g = build_group(T, Labeling(tuple(range(T.p))), n=2 * T.q)
        els = rng.sample(g.elements(), T.q)
        zero, root = rng.choice(g.elements()), rng.randrange(T.p)
        F = tree_group_coloring(T, g, dict(enumerate(els)), zero=zero, root=root)
        assert F[root] == zero
        assert all(add(g, F[u], F[v], zero) == els[i] for i, (u, v) in enumerate(T.edges))


def test_tree_coloring_errors():
    g = build_group(cycle_graph(3), Labeling((0, 1, 3)), n=6)
    with pytest.raises(GraphError):
        tree_group_coloring(cycle_graph(3), g, {0: 1, 1: 2, 2: 3})
    h = build_group(path_graph(3), Labeling((0, 2, 1)), n=4)
    with pytest.raises(GroupError):
        tree_group_coloring(path_graph(3), h, {0: 1})


# ---------------------------------------------------------------------------
# encryption

def test_encrypt_k2():
    g = build_group(K2, Labeling((0, 1)), n=4)
    enc = encrypt_graph(K2, g, {0: 1, 1: 2})
    assert enc.edge == (2,)


def test_encrypt_graceful_flag_from_tree_coloring():
    T = path_graph(5)
    g = build_group(T, Labeling((0, 4, 1, 3, 2)), n=2 * T.q)
    F = tree_group_coloring(T, g, {i: i + 1 for i in range(T.q)})
    enc = encrypt_graph(T, g, F)
    assert enc.graceful and not enc.odd_graceful
    F = tree_group_coloring(T, g, {i: 2 * i + 1 for i in range(T.q)})
    assert encrypt_graph(T, g, F).odd_graceful


def test_encrypt_constant_assignment():
    g = build_group(K2, Labeling((0, 1)), n=5)
    enc = encrypt_graph(star_graph(3), g, {v: 2 for v in range(4)})
    assert len(set(enc.edge)) == 1 and not enc.graceful


def test_encrypt_is_deterministic():
    g = build_group(path_graph(4), Labeling((0, 5, 2, 3)), n=6)
    H = cycle_graph(5)
    assert encrypt_graph(H, g, 11) == encrypt_graph(H, g, 11)
    assert json.dumps(encrypt_graph(H, g, 11).to_json()) == json.dumps(encrypt_graph(H, g, 11).to_json())
    with pytest.raises(GroupError):
        encrypt_graph(H, g, {0: 1})


def test_group_json():
    g = build_group(K2, Labeling((0, 1)), n=2)
    doc = json.loads(json.dumps(g.to_json()))
    assert doc["elements"] == [{"index": 1, "labels": [0, 1]}, {"index": 2, "labels": [1, 0]}]
