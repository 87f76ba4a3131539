"""Simple undirected graphs with indexed vertices and an ordered edge list.

Graphs are immutable.  Every operation returns a new graph; edge order is
load order and operations keep it, appending any new edges at the end.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or violated operation preconditions."""


Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    p: int
    edges: tuple[Edge, ...] = ()
    names: Optional[tuple[str, ...]] = None
    _adj: tuple[frozenset, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.p < 0:
            raise GraphError("negative vertex count")
        adj = [set() for _ in range(self.p)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.p and 0 <= v < self.p):
                raise GraphError(f"edge ({u},{v}) out of range for p={self.p}")
            if v in adj[u]:
                raise GraphError(f"duplicate edge ({u},{v})")
            adj[u].add(v)
            adj[v].add(u)
        if self.names is not None:
            names = tuple(str(s) for s in self.names)
            if len(names) != self.p:
                raise GraphError("names must have one entry per vertex")
            object.__setattr__(self, "names", names)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    @property
    def q(self) -> int:
        return len(self.edges)

    def neighbors(self, u: int) -> frozenset:
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.p and v in self._adj[u]

    def edge_index(self, u: int, v: int) -> int:
        for i, (a, b) in enumerate(self.edges):
            if (a, b) == (u, v) or (a, b) == (v, u):
                return i
        raise GraphError(f"({u},{v}) is not an edge")

    def is_connected(self) -> bool:
        if self.p == 0:
            return True
        return len(_component(self, 0)) == self.p

    def is_tree(self) -> bool:
        return self.q == self.p - 1 and self.is_connected()

    def components(self) -> list[list[int]]:
        seen = set()
        out = []
        for s in range(self.p):
            if s not in seen:
                comp = sorted(_component(self, s))
                seen.update(comp)
                out.append(comp)
        return out

    def to_json(self) -> dict:
        doc = {"p": self.p, "edges": [list(e) for e in self.edges]}
        if self.names is not None:
            doc["names"] = list(self.names)
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "Graph":
        return cls(doc["p"], tuple(tuple(e) for e in doc["edges"]), doc.get("names"))

    def dumps(self) -> str:
        return json.dumps(self.to_json())


@dataclass(frozen=True)
class Bipartition:
    X: frozenset
    Y: frozenset

    def side(self, v: int) -> str:
        return "X" if v in self.X else "Y"


def _component(G: Graph, s: int) -> set:
    seen = {s}
    todo = [s]
    while todo:
        u = todo.pop()
        for w in G.neighbors(u):
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    Lines hold ``u v`` pairs.  An optional first line ``p q`` is a header;
    it is recognised when the second number matches the number of edge lines
    that follow.  Blank lines and ``#`` comments are skipped.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((lineno, int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}") from None
    p = None
    if rows:
        hp, hq = rows[0][1], rows[0][2]
        rest = rows[1:]
        top = 1 + max((max(u, v) for _, u, v in rest), default=-1)
        # a header "p q" must count the remaining lines and cover their indices
        if hq == len(rest) and hp >= top and (rest or hq == 0):
            p = hp
            rows = rest
    seen = set()
    edges = []
    for lineno, u, v in rows:
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at {u}")
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex index")
        key = frozenset((u, v))
        if key in seen:
            raise GraphError(f"line {lineno}: duplicate edge ({u},{v})")
        seen.add(key)
        edges.append((u, v))
    top = 1 + max((max(e) for e in edges), default=-1)
    if p is None:
        p = top
    elif p < top:
        raise GraphError(f"header declares p={p} but edges use vertex {top - 1}")
    return Graph(p, tuple(edges))


def format_graph(G: Graph) -> str:
    lines = [f"{G.p} {G.q}"] + [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def bipartition(G: Graph) -> Optional[Bipartition]:
    """2-colour each component by BFS; X holds the smallest index of each component."""
    color = [-1] * G.p
    for s in range(G.p):
        if color[s] >= 0:
            continue
        color[s] = 0
        dq = deque([s])
        while dq:
            u = dq.popleft()
            for w in G.neighbors(u):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    dq.append(w)
                elif color[w] == color[u]:
                    return None
    X = frozenset(v for v in range(G.p) if color[v] == 0)
    return Bipartition(X, frozenset(range(G.p)) - X)


def _relabel(G: Graph, mapping: dict, p: int, edges) -> Graph:
    names = None
    if G.names is not None:
        names = [""] * p
        for old, new in mapping.items():
            if new is not None and not names[new]:
                names[new] = G.names[old]
        names = [n or str(i) for i, n in enumerate(names)]
    return Graph(p, tuple(edges), names)


def vertex_split(G: Graph, u: int, part: Iterable[int]) -> Graph:
    """Split u into u' (keeps index u, adjacent to part) and u'' (new index p)."""
    part = set(part)
    nbrs = G.neighbors(u)
    if G.degree(u) < 2:
        raise GraphError(f"vertex {u} has degree {G.degree(u)} < 2")
    if not part or not part < nbrs:
        raise GraphError("part must be a nonempty proper subset of N(u)")
    new = G.p
    edges = []
    for a, b in G.edges:
        if a == u and b not in part:
            a = new
        elif b == u and a not in part:
            b = new
        edges.append((a, b))
    names = None if G.names is None else G.names + (G.names[u] + "''",)
    return Graph(G.p + 1, tuple(edges), names)


def _drop_vertices(G: Graph, edges, merged: dict, dropped: Sequence[int]) -> Graph:
    """Rewrite edges through `merged`, then remove `dropped` vertices and compact indices."""
    dropped = sorted(set(dropped))
    keep = [v for v in range(G.p) if v not in set(dropped)]
    pos = {v: i for i, v in enumerate(keep)}
    out = []
    for a, b in edges:
        a = merged.get(a, a)
        b = merged.get(b, b)
        out.append((pos[a], pos[b]))
    names = None if G.names is None else tuple(G.names[v] for v in keep)
    return Graph(len(keep), tuple(out), names)


def vertex_coincide(G: Graph, u: int, v: int) -> Graph:
    """Merge non-adjacent u, v without common neighbours; the merged vertex keeps min(u, v)."""
    if u == v:
        raise GraphError("cannot coincide a vertex with itself")
    if G.has_edge(u, v):
        raise GraphError(f"{u} and {v} are adjacent")
    if G.neighbors(u) & G.neighbors(v):
        raise GraphError(f"{u} and {v} have a common neighbour")
    lo, hi = min(u, v), max(u, v)
    return _drop_vertices(G, G.edges, {hi: lo}, [hi])


def leaf_split(G: Graph, e: Edge) -> Graph:
    """Remove uv, hang a new leaf v'' on u and a new leaf u' on v."""
    u, v = e
    i = G.edge_index(u, v)
    edges = list(G.edges[:i] + G.edges[i + 1:])
    edges += [(u, G.p), (v, G.p + 1)]
    names = None if G.names is None else G.names + (G.names[v] + "''", G.names[u] + "'")
    return Graph(G.p + 2, tuple(edges), names)


def leaf_coincide(G: Graph, e1: Edge, e2: Edge) -> Graph:
    """Merge leaf-edges e1 = (u, v') and e2 = (u', v) into uv.

    v' and u' must be leaves; v' is identified with v and u' with u.
    """
    u, vp = e1
    up, v = e2
    G.edge_index(u, vp)
    G.edge_index(up, v)
    if G.degree(vp) != 1 or G.degree(up) != 1:
        raise GraphError("second end of e1 and first end of e2 must be leaves")
    if len({u, vp, up, v}) != 4:
        raise GraphError("the two leaf-edges must be vertex-disjoint")
    if (G.neighbors(u) - {vp}) & (G.neighbors(v) - {up}):
        raise GraphError("supports share a neighbour")
    if G.has_edge(u, v):
        raise GraphError(f"merge would duplicate edge ({u},{v})")
    i, j = G.edge_index(u, vp), G.edge_index(up, v)
    edges = [e for k, e in enumerate(G.edges) if k not in (i, j)] + [(u, v)]
    return _drop_vertices(G, edges, {}, [vp, up])


def edge_split(G: Graph, e: Edge, partU: Iterable[int], partV: Iterable[int]) -> Graph:
    """Split uv into u'v' (old indices) and u''v'' (indices p, p+1).

    partU goes with u', the rest of N(u)-v with u''; likewise partV for v.
    The four neighbour blocks must be pairwise disjoint.
    """
    u, v = e
    G.edge_index(u, v)
    NU = G.neighbors(u) - {v}
    NV = G.neighbors(v) - {u}
    partU, partV = set(partU), set(partV)
    if not partU <= NU or not partV <= NV:
        raise GraphError("blocks must be subsets of N(u)-v and N(v)-u")
    blocks = [partU, NU - partU, partV, NV - partV]
    for a, b in itertools.combinations(blocks, 2):
        if a & b:
            raise GraphError("neighbour blocks must be pairwise disjoint")
    u2, v2 = G.p, G.p + 1
    edges = []
    for a, b in G.edges:
        if {a, b} == {u, v}:
            edges.append((a, b))
            continue
        if a == u and b not in partU:
            a = u2
        elif b == u and a not in partU:
            b = u2
        elif a == v and b not in partV:
            a = v2
        elif b == v and a not in partV:
            b = v2
        edges.append((a, b))
    edges.append((u2, v2))
    names = None if G.names is None else G.names + (G.names[u] + "''", G.names[v] + "''")
    return Graph(G.p + 2, tuple(edges), names)


def edge_coincide(G: Graph, e1: Edge, e2: Edge) -> Graph:
    """Merge edges u'v' and u''v'' into one edge; u'' folds into u', v'' into v'."""
    a1, b1 = e1
    a2, b2 = e2
    G.edge_index(a1, b1)  # raises when e1 is absent
    j = G.edge_index(a2, b2)
    if len({a1, b1, a2, b2}) != 4:
        raise GraphError("edge endpoints must be pairwise distinct")
    if G.neighbors(a1) & G.neighbors(a2) or G.neighbors(b1) & G.neighbors(b2):
        raise GraphError("neighbour clash between coincided ends")
    if G.has_edge(a1, a2) or G.has_edge(b1, b2) or G.has_edge(a1, b2) or G.has_edge(a2, b1):
        raise GraphError("coincided ends are adjacent; merge would create a loop or multi-edge")
    edges = [ed for k, ed in enumerate(G.edges) if k != j]
    return _drop_vertices(G, edges, {a2: a1, b2: b1}, [a2, b2])


def disjoint_union(parts: Sequence[Graph]) -> tuple[Graph, tuple[int, ...]]:
    """Relabelled union; returns the graph and the index offset of each part."""
    offsets = []
    edges = []
    p = 0
    for H in parts:
        offsets.append(p)
        edges += [(a + p, b + p) for a, b in H.edges]
        p += H.p
    return Graph(p, tuple(edges)), tuple(offsets)


def add_edges(G: Graph, extra: Iterable[Edge]) -> Graph:
    return Graph(G.p, G.edges + tuple(tuple(e) for e in extra), G.names)


def degree_sequence(G: Graph):
    from .degseq import DegreeSequence

    return DegreeSequence(G.degree(v) for v in range(G.p))


def canonical_edges(G: Graph) -> frozenset:
    return frozenset(frozenset(e) for e in G.edges)


def is_isomorphic(G: Graph, H: Graph) -> bool:
    """Brute-force isomorphism test by permutation search (p <= 8)."""
    if G.p != H.p or G.q != H.q:
        return False
    if G.p > 8:
        raise GraphError("brute-force isomorphism is limited to p <= 8")
    if sorted(G.degree(v) for v in range(G.p)) != sorted(H.degree(v) for v in range(H.p)):
        return False
    target = canonical_edges(H)
    for perm in itertools.permutations(range(G.p)):
        if all(G.degree(v) == H.degree(perm[v]) for v in range(G.p)):
            if frozenset(frozenset((perm[a], perm[b])) for a, b in G.edges) == target:
                return True
    return False
