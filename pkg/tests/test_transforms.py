import random

import pytest
from hypothesis import given, settings, strategies as st

from topcoding.graph import Graph, bipartition, path_graph, star_graph
from topcoding.labelings import Labeling, VerifierSpec, induced_colors, magic_profile, verify
from topcoding.solver import find_labeling, search
from topcoding.transforms import (
    EQUIVALENT_TARGETS, HARMONIOUS_TARGETS, TransformError, canonical, dual, equivalent_transform,
    harmonious_family, harmonious_labels, harmonious_spec, image_pair, kd_graceful_from_graceful,
    leaf_add_kd, linear, partial_dual, reciprocal,
)

from conftest import random_caterpillar

K2 = Graph(2, ((0, 1),))
P4 = path_graph(4)
P4F = Labeling((0, 3, 1, 2))  # X = {0, 2} carries 0, 1; Y = {1, 3} carries 3, 2
SOG = VerifierSpec("set-ordered-graceful")


def side_labels(G, f, side):
    B = bipartition(G)
    return tuple(f.vertex[v] for v in sorted(B.X if side == "X" else B.Y))


def is_set_ordered(G, f):
    B = bipartition(G)
    a = [f.vertex[v] for v in B.X]
    b = [f.vertex[v] for v in B.Y]
    return max(a) < min(b) or max(b) < min(a)


# ---------------------------------------------------------------------------
# dual and friends

def test_dual_examples():
    assert dual(Labeling((0, 1, 3))).vertex == (3, 2, 0)
    g = dual(Labeling((0, 2, 1)))
    assert g.vertex == (2, 0, 1)
    assert verify(path_graph(3), g, VerifierSpec("graceful")).passed
    with pytest.raises(TransformError):
        dual(Labeling((0, 1)), [])


def test_dual_on_element_subsets():
    f = Labeling((1, 5, 2), (7, 3))
    assert dual(f, "E") == Labeling((1, 5, 2), (3, 7))
    assert dual(f, "all") == Labeling((7, 3, 6), (1, 5))
    assert dual(f, [("v", 0), ("e", 1)]) == Labeling((3, 5, 2), (7, 1))
    with pytest.raises(TransformError):
        dual(Labeling((1, 2)), "E")


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 50), min_size=1, max_size=8),
       st.sampled_from(["V", "all"]))
def test_dual_is_involution(vals, S):
    f = Labeling(tuple(vals), tuple(reversed(vals)))
    assert dual(dual(f, S), S) == f


def test_linear_examples():
    assert linear(P4, P4F, 1, 0) == P4F
    g = linear(P4, P4F, 2, 1)
    assert side_labels(P4, g, "X") == (0, 2) and sorted(side_labels(P4, g, "Y")) == [5, 7]
    with pytest.raises(TransformError):
        linear(P4, P4F, 0, 1)
    with pytest.raises(TransformError):
        linear(P4, P4F, 1, -1)
    with pytest.raises(TransformError):
        linear(Graph(3, ((0, 1), (1, 2), (0, 2))), Labeling((0, 1, 2)), 1, 0)


def test_partial_dual_examples():
    g = partial_dual(P4, P4F, "X")
    assert side_labels(P4, g, "X") == (1, 0)
    assert side_labels(P4, g, "Y") == side_labels(P4, P4F, "Y")
    assert is_set_ordered(P4, g)
    # both halves together give the full dual
    both = partial_dual(P4, partial_dual(P4, P4F, "X"), "Y")
    assert side_labels(P4, both, "X") == (1, 0) and side_labels(P4, both, "Y") == (2, 3)
    assert partial_dual(P4, partial_dual(P4, P4F, "Y"), "X") == both
    with pytest.raises(TransformError):
        partial_dual(P4, P4F, "Z")


def test_partial_duals_have_consecutive_edge_sums():
    # with X on [0,s-1] and Y on [s,q], either partial dual puts the edge sums on [s,s+q-1]
    for n in range(2, 8):
        G = path_graph(n)
        for f in search(G, SOG, limit=6):
            s = canonical(G, f).s
            for side in "XY":
                g = partial_dual(G, f, side)
                assert is_set_ordered(G, g)
                assert verify(G, g, VerifierSpec("strongly-c-harmonious", c=s)).passed


def test_partial_dual_reinduces_edges():
    f = Labeling(P4F.vertex, tuple(induced_colors(P4, P4F)))
    g = partial_dual(P4, f, "Y")
    assert g.edge == tuple(induced_colors(P4, Labeling(g.vertex)))


def test_reciprocal_is_involution_and_reverses_order():
    f = Labeling((0, 7, 3, 9, 1))
    G = path_graph(5)
    g = reciprocal(G, f, "X")
    assert sorted(side_labels(G, g, "X")) == sorted(side_labels(G, f, "X"))
    assert side_labels(G, g, "X") == (3, 0, 1)
    assert reciprocal(G, g, "X") == f
    assert reciprocal(G, f, "Y") == Labeling((0, 9, 3, 7, 1))


# ---------------------------------------------------------------------------
# canonical form and the harmonious family

def test_canonical():
    C = canonical(P4, P4F)
    assert C.xs == (0, 2) and C.ys == (3, 1) and (C.s, C.t) == (2, 2)
    assert C.y_rev(1) == 3
    with pytest.raises(TransformError):
        canonical(P4, Labeling((0, 1, 2, 3)))


def test_g2_on_p4():
    g = harmonious_family(P4, P4F, "g2")
    C = canonical(P4, P4F)
    assert tuple(g.vertex[x] for x in C.xs) == (0, 2)
    assert tuple(g.vertex[y] for y in C.ys) == (6, 4)


def test_g3_on_p4():
    g = harmonious_family(P4, P4F, "g3")
    C = canonical(P4, P4F)
    assert tuple(g.vertex[x] for x in C.xs) == (0, 2)
    assert tuple(g.vertex[y] for y in C.ys) == (5, 3)
    cols = sorted((g.vertex[u] + g.vertex[v]) % 6 for u, v in P4.edges)
    assert cols == [1, 3, 5]


def test_g7_with_unit_parameters_matches_g1_on_x():
    g1 = harmonious_labels(P4, P4F, "g1")
    g7 = harmonious_labels(P4, P4F, "g7", k=1, d=1)
    C = canonical(P4, P4F)
    assert [g1.vertex[x] for x in C.xs] == [g7.vertex[x] for x in C.xs]


def test_g6_needs_unbalanced_sides():
    with pytest.raises(TransformError, match=r"\|s-t\|"):
        harmonious_labels(P4, P4F, "g6")
    with pytest.raises(TransformError):
        harmonious_labels(P4, P4F, "g9")


@pytest.mark.parametrize("member", ["g1", "g2", "g3", "g5", "g7"])
def test_family_members_verify_on_paths(member):
    for n in range(2, 8):
        G = path_graph(n)
        for f in search(G, SOG, limit=4):
            g = harmonious_family(G, f, member, k=2, d=3)
            assert verify(G, g, harmonious_spec(member, 2, 3)).passed
            assert HARMONIOUS_TARGETS[member] == harmonious_spec(member, 2, 3).kind


def test_g4_verifies_for_unit_k():
    for n in range(2, 8):
        G = path_graph(n)
        for f in search(G, SOG, limit=4):
            assert verify(G, harmonious_family(G, f, "g4", k=1), harmonious_spec("g4", 1)).passed


def test_g4_labels_leave_the_range_for_larger_k():
    g = harmonious_labels(P4, P4F, "g4", k=2)
    assert max(g.vertex) > 2 + 2 * P4.q - 1
    with pytest.raises(TransformError):
        harmonious_family(P4, P4F, "g4", k=2)


def test_g6_formula_fails_its_target():
    # P3 has |s-t| = 1, yet 2f(y)-1 runs past q
    G = path_graph(3)
    f = find_labeling(G, SOG)
    g = harmonious_labels(G, f, "g6")
    assert max(g.vertex) > G.q
    with pytest.raises(TransformError):
        harmonious_family(G, f, "g6")


# ---------------------------------------------------------------------------
# equivalences

def test_odd_graceful_image_on_p4():
    g = equivalent_transform(P4, P4F, "odd-graceful")
    C = canonical(P4, P4F)
    assert tuple(g.vertex[x] for x in C.xs) == (0, 2)
    assert tuple(g.vertex[y] for y in C.ys) == (3, 5)
    assert sorted(g.edge) == [1, 3, 5]


def test_odd_graceful_image_on_k2():
    g = equivalent_transform(K2, Labeling((0, 1)), "odd-graceful")
    assert g == Labeling((0, 1), (1,))


def test_edge_magic_image_on_p4():
    g = equivalent_transform(P4, P4F, "edge-magic-total")
    c = magic_profile(P4, g).sum
    assert verify(P4, g, VerifierSpec("edge-magic-total")).derived_constant == c
    constants = {verify(P4, h, VerifierSpec("edge-magic-total")).derived_constant
                 for h in search(P4, VerifierSpec("edge-magic-total"))}
    assert c in constants


@pytest.mark.parametrize("target", EQUIVALENT_TARGETS)
def test_equivalences_on_small_trees(target):
    for G in (K2, path_graph(3), P4, path_graph(6), star_graph(4)):
        for f in search(G, SOG, limit=3):
            equivalent_transform(G, f, target)


def test_unknown_target():
    with pytest.raises(TransformError):
        equivalent_transform(P4, P4F, "nope")


# ---------------------------------------------------------------------------
# (k,d)-graceful, images, leaves

def test_kd_graceful_from_graceful():
    g = kd_graceful_from_graceful(P4, P4F, 1, 1)
    assert g == P4F
    g = kd_graceful_from_graceful(P4, P4F, 3, 2)
    assert sorted(induced_colors(P4, g)) == [3, 5, 7]
    with pytest.raises(TransformError):
        kd_graceful_from_graceful(P4, Labeling((0, 1, 2, 3)), 1, 1)
    with pytest.raises(TransformError):
        kd_graceful_from_graceful(P4, P4F, 0, 1)


def test_image_pair():
    g = image_pair(P4, P4F, 4)
    assert [a + b for a, b in zip(induced_colors(P4, P4F), induced_colors(P4, g))] == [4, 4, 4]
    assert sorted(induced_colors(P4, g)) == [1, 2, 3]
    assert induced_colors(K2, image_pair(K2, Labeling((0, 1)), 2)) == [1]
    with pytest.raises(TransformError):
        image_pair(P4, P4F, 3)


def total(G, f):
    return Labeling(f.vertex, tuple(induced_colors(G, f)))


def test_leaf_add_zero_leaves_is_identity():
    f = total(P4, P4F)
    H, g = leaf_add_kd(P4, f, {}, 1, 1)
    assert (H, g) == (P4, f)


def test_leaf_add_on_k2():
    H, g = leaf_add_kd(K2, Labeling((0, 1), (1,)), {0: 1, 1: 1}, 1, 1)
    assert H.p == 4 and H.is_tree() and sorted(H.degree(v) for v in range(4)) == [1, 1, 2, 2]
    assert verify(H, g, VerifierSpec("kd-graceful-total", k=1, d=1)).passed


def test_leaf_add_on_star():
    S = star_graph(3)
    f = kd_graceful_from_graceful(S, find_labeling(S, SOG), 2, 3)
    f = total(S, f)
    center = 0
    H, g = leaf_add_kd(S, f, {center: 2}, 2, 3)
    assert (H.p, H.q) == (6, 5) and H.degree(center) == 5
    assert verify(H, g, VerifierSpec("kd-graceful-total", k=2, d=3)).passed
    assert is_set_ordered(H, g)


def test_leaf_add_rejects_bad_input():
    with pytest.raises(TransformError):
        leaf_add_kd(P4, P4F, {}, 1, 1)
    with pytest.raises(TransformError):
        leaf_add_kd(P4, Labeling((0, 1, 2, 3), (1, 1, 1)), {}, 1, 1)


def test_leaf_add_random_caterpillars():
    rng = random.Random(7)
    for _ in range(40):
        G = random_caterpillar(rng, rng.randint(2, 7))
        k, d = rng.randint(1, 3), rng.randint(1, 3)
        f = total(G, kd_graceful_from_graceful(G, find_labeling(G, SOG), k, d))
        counts = {v: rng.randint(0, 2) for v in range(G.p)}
        H, g = leaf_add_kd(G, f, counts, k, d)
        assert H.p == G.p + sum(counts.values()) and H.is_tree()
        assert bipartition(H) is not None
        assert verify(H, g, VerifierSpec("kd-graceful-total", k=k, d=d)).passed


def test_leaf_add_does_not_always_keep_set_order():
    # new leaves of X land on Y at f(x)+k+(r-1)d, which can undercut Y
    S = star_graph(3)
    f = total(S, Labeling((0, 3, 4, 5)))
    H, g = leaf_add_kd(S, f, {0: 1, 1: 2, 3: 2}, 3, 1)
    assert verify(H, g, VerifierSpec("kd-graceful-total", k=3, d=1)).passed
    assert not is_set_ordered(H, g)
