"""Every-zero graphic groups.

A group is the family of translates of one base labeling: element i carries
f_i(x) = f(x) + (i-1) mod n.  Any element can serve as the zero, and under
zero k the sum of elements i and j is element i+j-k (mod n).  Indices are
1-based throughout.  Mixed groups translate vertex colors mod pmod and edge
colors mod qmod independently, so their elements are pairs (s, k).
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence, Union

import numpy as np

from .graph import Graph, GraphError
from .labelings import Labeling, induced_colors

MODES = ("vertex", "edge", "mixed")
AXIOM_LIMIT = 64

Index = Union[int, tuple[int, int]]


class GroupError(ValueError):
    pass


def _wrap(a: int, n: int) -> int:
    """Map any integer to [1, n] by the cyclic rule."""
    return (a - 1) % n + 1


@dataclass(frozen=True)
class GraphicGroup:
    graph: Graph
    base: Labeling
    mode: str
    n: int
    pmod: int = 0
    qmod: int = 0
    # labels[t] is the color vector of the t-th element (flat, 0-based) on the mode's domain
    labels: tuple[tuple[int, ...], ...] = field(default=(), repr=False)
    moduli: tuple[int, ...] = field(default=(), repr=False)

    @property
    def size(self) -> int:
        return self.pmod * self.qmod if self.mode == "mixed" else self.n

    def elements(self) -> list[Index]:
        if self.mode == "mixed":
            return [(s, k) for s in range(1, self.pmod + 1) for k in range(1, self.qmod + 1)]
        return list(range(1, self.n + 1))

    def flat(self, i: Index) -> int:
        """0-based position of element i in `labels`."""
        if self.mode == "mixed":
            try:
                s, k = i
            except (TypeError, ValueError):
                raise GroupError(f"mixed elements are (s, k) pairs, got {i!r}") from None
            if not (1 <= s <= self.pmod and 1 <= k <= self.qmod):
                raise GroupError(f"element {i} out of range")
            return (s - 1) * self.qmod + (k - 1)
        if isinstance(i, bool) or not isinstance(i, (int, np.integer)) or not 1 <= i <= self.n:
            raise GroupError(f"element index {i!r} out of range [1,{self.n}]")
        return int(i) - 1

    def element(self, t: int) -> Index:
        if self.mode == "mixed":
            return (t // self.qmod + 1, t % self.qmod + 1)
        return t + 1

    def labeling(self, i: Index) -> tuple[int, ...]:
        return self.labels[self.flat(i)]

    def to_json(self) -> dict:
        doc = {"mode": self.mode, "n": self.n, "graph": self.graph.to_json(), "base": self.base.to_json()}
        if self.mode == "mixed":
            doc.update(pmod=self.pmod, qmod=self.qmod)
        doc["elements"] = [
            {"index": list(e) if isinstance(e, tuple) else e, "labels": list(self.labels[t])}
            for t, e in enumerate(self.elements())
        ]
        return doc


def _base_colors(G: Graph, f: Labeling, mode: str) -> tuple[list[int], list[int]]:
    V = list(f.vertex)
    if len(V) != G.p:
        raise GroupError("base labeling does not cover the vertices")
    if mode == "vertex":
        return V, []
    E = list(f.edge) if f.edge is not None else induced_colors(G, f)
    if len(E) != G.q:
        raise GroupError("base labeling does not cover the edges")
    return V, E


def build_group(G: Graph, f: Labeling, n: Optional[int] = None, mode: str = "vertex",
                pmod: Optional[int] = None, qmod: Optional[int] = None) -> GraphicGroup:
    """Translate f through every offset.

    vertex and edge modes need n >= 1 and translate the vertex (or edge)
    colors mod n.  mixed mode takes pmod and qmod (default p and q) and
    translates vertex colors mod pmod and edge colors mod qmod.
    """
    if mode not in MODES:
        raise GroupError(f"mode must be one of {MODES}")
    V, E = _base_colors(G, f, mode)
    if mode == "mixed":
        pmod = G.p if pmod is None else pmod
        qmod = G.q if qmod is None else qmod
        if pmod < 1 or qmod < 1:
            raise GroupError("pmod and qmod must be at least 1")
        base_v = np.array(V, dtype=np.int64)
        base_e = np.array(E, dtype=np.int64)
        rows = []
        for s in range(pmod):
            for k in range(qmod):
                rows.append(tuple(int(a) for a in np.concatenate([(base_v + s) % pmod, (base_e + k) % qmod])))
        moduli = (pmod,) * len(V) + (qmod,) * len(E)
        return GraphicGroup(G, f, mode, pmod * qmod, pmod, qmod, tuple(rows), moduli)
    if n is None or n < 1:
        raise GroupError("n must be at least 1")
    dom = np.array(V if mode == "vertex" else E, dtype=np.int64)
    rows = tuple(tuple(int(a) for a in (dom + i) % n) for i in range(n))
    return GraphicGroup(G, f, mode, n, labels=rows, moduli=(n,) * len(dom))


# ---------------------------------------------------------------------------
# arithmetic

def add(group: GraphicGroup, i: Index, j: Index, k: Index) -> Index:
    """i (+) j under zero k: index i + j - k, wrapped into range."""
    for a in (i, j, k):
        group.flat(a)
    if group.mode == "mixed":
        return (_wrap(i[0] + j[0] - k[0], group.pmod), _wrap(i[1] + j[1] - k[1], group.qmod))
    return _wrap(i + j - k, group.n)


def subtract(group: GraphicGroup, i: Index, j: Index, k: Index) -> Index:
    """i (-) j under zero k: index i - j + k, wrapped into range."""
    for a in (i, j, k):
        group.flat(a)
    if group.mode == "mixed":
        return (_wrap(i[0] - j[0] + k[0], group.pmod), _wrap(i[1] - j[1] + k[1], group.qmod))
    return _wrap(i - j + k, group.n)


def inverse(group: GraphicGroup, i: Index, k: Index) -> Index:
    return subtract(group, k, i, k)


def _table(group: GraphicGroup, zero: int) -> np.ndarray:
    """Flat addition table under the flat zero position."""
    N = group.size
    t = np.arange(N)
    if group.mode == "mixed":
        P, Q = group.pmod, group.qmod
        s, k = t // Q, t % Q
        zs, zk = zero // Q, zero % Q
        S = (s[:, None] + s[None, :] - zs) % P
        K = (k[:, None] + k[None, :] - zk) % Q
        return S * Q + K
    return (t[:, None] + t[None, :] - zero) % N


@dataclass
class AxiomReport:
    closure: bool = True
    zero_law: bool = True
    inverse: bool = True
    associative: bool = True
    commutative: bool = True
    label_identity: bool = True
    failures: list = field(default_factory=list)
    literal_mismatches: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "closure": self.closure, "zeroLaw": self.zero_law, "inverse": self.inverse,
            "associative": self.associative, "commutative": self.commutative,
            "labelIdentity": self.label_identity,
            "failures": [[a, b if not isinstance(b, tuple) else list(b)] for a, b in self.failures],
            "literalMismatches": self.literal_mismatches,
        }


def check_axioms(group: GraphicGroup, zeros: Optional[Sequence[Index]] = None) -> AxiomReport:
    """Check the group laws at index level and the label identity, for every zero.

    The label identity is f_i(x) + f_j(x) - f_k(x) = f_lambda(x) modulo the
    domain's modulus.  The count of positions where the literal
    "modulus minus value" rule for out-of-range sums disagrees with plain
    reduction is reported but is not a failure.
    """
    N = group.size
    if N > AXIOM_LIMIT:
        raise GroupError(f"exhaustive check limited to {AXIOM_LIMIT} elements")
    rep = AxiomReport()
    L = np.array(group.labels, dtype=np.int64).reshape(N, -1)
    M = np.array(group.moduli, dtype=np.int64)
    flat_zeros = range(N) if zeros is None else [group.flat(z) for z in zeros]
    idx = np.arange(N)
    for z in flat_zeros:
        A = _table(group, z)
        name = group.element(z)
        if A.min() < 0 or A.max() >= N:
            rep.closure = False
            rep.failures.append(("closure", name))
        if not (A[:, z] == idx).all():
            rep.zero_law = False
            rep.failures.append(("zero law", name))
        if not ((A == z).sum(axis=1) == 1).all():
            rep.inverse = False
            rep.failures.append(("unique inverse", name))
        # (i+j)+l against i+(j+l), indexed [i, j, l]
        if not (A[A[:, :, None], idx[None, None, :]] == A[idx[:, None, None], A[None, :, :]]).all():
            rep.associative = False
            rep.failures.append(("associative", name))
        if not (A == A.T).all():
            rep.commutative = False
            rep.failures.append(("commutative", name))
        if L.shape[1]:
            raw = L[:, None, :] + L[None, :, :] - L[z][None, None, :]
            want = L[A]
            if not ((raw - want) % M == 0).all():
                rep.label_identity = False
                rep.failures.append(("label identity", name))
            literal = np.where((raw < 0) | (raw >= M), M - raw, raw)
            rep.literal_mismatches += int(((literal % M) != (raw % M)).sum())
    return rep


# ---------------------------------------------------------------------------
# colorings with group elements

def tree_group_coloring(T: Graph, group: GraphicGroup, assignment: Mapping, zero: Index = 1,
                        root: int = 0) -> dict[int, Index]:
    """Vertex elements F with F(uv) = F(u) (+) F(v) for the given edge elements.

    `assignment` maps each edge (as a (u, v) pair or an edge index) to an
    element.  The root gets the zero; a breadth-first sweep then solves each
    child as F(v) = F(uv) (-) F(u) under that zero.
    """
    if not T.is_tree():
        raise GraphError("tree_group_coloring needs a tree")
    edge_el = _edge_elements(T, assignment)
    group.flat(zero)
    F: dict[int, Index] = {root: zero}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in T.neighbors(u):
            if v in F:
                continue
            F[v] = subtract(group, edge_el[T.edge_index(u, v)], F[u], zero)
            queue.append(v)
    for i, (u, v) in enumerate(T.edges):
        assert add(group, F[u], F[v], zero) == edge_el[i], "inconsistent tree coloring"
    return dict(sorted(F.items()))


def _edge_elements(G: Graph, assignment: Mapping) -> list:
    out = [None] * G.q
    for key, el in assignment.items():
        if isinstance(key, (tuple, list)):
            i = G.edge_index(int(key[0]), int(key[1]))
        else:
            i = int(key)
        if not 0 <= i < G.q:
            raise GroupError(f"edge {key!r} not in graph")
        out[i] = tuple(el) if isinstance(el, list) else el
    if any(e is None for e in out):
        raise GroupError("assignment must cover every edge")
    return out


@dataclass(frozen=True)
class Encryption:
    vertex: dict
    edge: tuple
    zero: Index
    graceful: bool
    odd_graceful: bool

    def to_json(self) -> dict:
        conv = lambda e: list(e) if isinstance(e, tuple) else e
        return {
            "zero": conv(self.zero),
            "vertex": {str(v): conv(e) for v, e in self.vertex.items()},
            "edge": [conv(e) for e in self.edge],
            "graceful": self.graceful,
            "oddGraceful": self.odd_graceful,
        }


def encrypt_graph(H: Graph, group: GraphicGroup, seed: Union[int, Mapping, None] = 0,
                  zero: Index = 1) -> Encryption:
    """Color every vertex of H with a group element and every edge with the sum of its ends.

    `seed` is either an explicit vertex-to-element map or an integer seed for
    drawing vertex elements uniformly.  The flags report whether the edge
    indices are exactly 1..q or exactly 1,3,...,2q-1.
    """
    group.flat(zero)
    if isinstance(seed, Mapping):
        F = {int(v): (tuple(e) if isinstance(e, list) else e) for v, e in seed.items()}
        if set(F) != set(range(H.p)):
            raise GroupError("vertex map must cover every vertex")
        for e in F.values():
            group.flat(e)
    else:
        rng = np.random.default_rng(seed)
        els = group.elements()
        F = {v: els[int(t)] for v, t in enumerate(rng.integers(0, len(els), size=H.p))}
    edges = tuple(add(group, F[u], F[v], zero) for u, v in H.edges)
    graceful = odd = False
    if group.mode != "mixed":
        got = Counter(edges)
        graceful = got == Counter(range(1, H.q + 1))
        odd = got == Counter(range(1, 2 * H.q, 2))
    return Encryption(F, edges, zero, graceful, odd)
