"""Labeling-to-labeling transformations.

Family transforms start from a set-ordered graceful labeling f of a
bipartite graph, written in canonical form: X = {x_1..x_s} with
f(x_i) = i-1 and Y = {y_1..y_t} with f(y_j) = s-1+j.  Every output is
re-verified against its target predicate; a failed check raises
`TransformError` instead of returning a bad labeling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Union

from .graph import Bipartition, Graph, bipartition
from .labelings import Labeling, VerifierSpec, VerifyReport, induced_colors, verify


class TransformError(ValueError):
    pass


# ---------------------------------------------------------------------------
# dual, partial dual, reciprocal, linear

Element = tuple[str, int]  # ("v", index) or ("e", index)


def _elements(f: Labeling, S) -> list[Element]:
    if S in ("V", "v", None):
        return [("v", i) for i in range(len(f.vertex))]
    if S in ("E", "e"):
        if f.edge is None:
            raise TransformError("labeling has no edge colors")
        return [("e", i) for i in range(len(f.edge))]
    if S in ("all", "VE"):
        return _elements(f, "V") + (_elements(f, "E") if f.edge is not None else [])
    return [(str(t), int(i)) for t, i in S]


def dual(f: Labeling, S: Union[str, Iterable[Element], None] = "V") -> Labeling:
    """Map each z in S to max f(S) + min f(S) - f(z); other elements unchanged."""
    elems = _elements(f, S)
    if not elems:
        raise TransformError("dual needs a nonempty element set")
    vert = list(f.vertex)
    edge = None if f.edge is None else list(f.edge)

    def get(t, i):
        if t == "e" and edge is None:
            raise TransformError("labeling has no edge colors")
        return vert[i] if t == "v" else edge[i]

    vals = [get(t, i) for t, i in elems]
    top = max(vals) + min(vals)
    for (t, i), c in zip(elems, vals):
        if t == "v":
            vert[i] = top - c
        else:
            edge[i] = top - c
    return Labeling(tuple(vert), None if edge is None else tuple(edge))


def _need_bip(G: Graph, B: Optional[Bipartition]) -> Bipartition:
    B = B or bipartition(G)
    if B is None:
        raise TransformError("graph is not bipartite")
    return B


def _side(B: Bipartition, side: str):
    if side not in ("X", "Y"):
        raise TransformError("side must be 'X' or 'Y'")
    return sorted(B.X if side == "X" else B.Y)


def partial_dual(G: Graph, f: Labeling, side: str, B: Optional[Bipartition] = None) -> Labeling:
    """Dual on one side of the bipartition only; edge colors are re-induced if present."""
    B = _need_bip(G, B)
    g = dual(Labeling(f.vertex), [("v", v) for v in _side(B, side)])
    return _reinduce(G, f, g)


def reciprocal(G: Graph, f: Labeling, side: str, B: Optional[Bipartition] = None) -> Labeling:
    """Reverse the label order on one side: the r-th smallest label swaps with the r-th largest."""
    B = _need_bip(G, B)
    verts = sorted(_side(B, side), key=lambda v: (f.vertex[v], v))
    labels = [f.vertex[v] for v in verts]
    vert = list(f.vertex)
    for v, c in zip(verts, reversed(labels)):
        vert[v] = c
    return _reinduce(G, f, Labeling(tuple(vert)))


def linear(G: Graph, f: Labeling, a: int, b: int, B: Optional[Bipartition] = None) -> Labeling:
    """(a,b)-linear map: a*f on X, b + a*f on Y."""
    if a < 1 or b < 0:
        raise TransformError("need a >= 1 and b >= 0")
    B = _need_bip(G, B)
    vert = [a * c + (b if v in B.Y else 0) for v, c in enumerate(f.vertex)]
    return _reinduce(G, f, Labeling(tuple(vert)))


def _reinduce(G: Graph, f: Labeling, g: Labeling) -> Labeling:
    if f.edge is None:
        return g
    return Labeling(g.vertex, tuple(induced_colors(G, g)))


# ---------------------------------------------------------------------------
# canonical set-ordered form

@dataclass(frozen=True)
class Canonical:
    xs: tuple[int, ...]  # x_1..x_s, ascending label
    ys: tuple[int, ...]  # y_1..y_t, ascending label
    f: Labeling

    @property
    def s(self) -> int:
        return len(self.xs)

    @property
    def t(self) -> int:
        return len(self.ys)

    def y_rev(self, j: int) -> int:
        """f(y_{t-j+1}) for 1-based j."""
        return self.f.vertex[self.ys[self.t - j]]


def canonical(G: Graph, f: Labeling) -> Canonical:
    """Rank X and Y by label and check f(x_i)=i-1, f(y_j)=s-1+j."""
    B = bipartition(G)
    if B is None or not G.is_connected():
        raise TransformError("need a connected bipartite graph")
    if not verify(G, Labeling(f.vertex), VerifierSpec("set-ordered-graceful")).passed:
        raise TransformError("labeling is not set-ordered graceful")
    X, Y = sorted(B.X), sorted(B.Y)
    if X and Y and max(f.vertex[v] for v in X) > min(f.vertex[v] for v in Y):
        X, Y = Y, X
    xs = tuple(sorted(X, key=lambda v: f.vertex[v]))
    ys = tuple(sorted(Y, key=lambda v: f.vertex[v]))
    s = len(xs)
    if [f.vertex[v] for v in xs] != list(range(s)) or [f.vertex[v] for v in ys] != list(range(s, s + len(ys))):
        raise TransformError("set-ordered graceful labeling is not in canonical form")
    return Canonical(xs, ys, Labeling(f.vertex))


def _check(G: Graph, g: Labeling, spec: VerifierSpec, what: str) -> VerifyReport:
    rep = verify(G, g, spec)
    if not rep.passed:
        raise TransformError(f"{what} output failed {spec.kind}: {rep.failures}")
    return rep


# ---------------------------------------------------------------------------
# harmonious family g1..g7

HARMONIOUS_TARGETS = {
    "g1": "harmonious",
    "g2": "even-harmonious",
    "g3": "odd-harmonious",
    "g4": "k-even-sequential",
    "g5": "strongly-c-harmonious",
    "g6": "strongly-odd-harmonious",
    "g7": "kd-harmonious",
}


def harmonious_spec(member: str, k: int = 1, d: int = 1) -> VerifierSpec:
    kind = HARMONIOUS_TARGETS[member]
    if member == "g1":
        return VerifierSpec(kind, tree_exception=True)
    if member == "g4":
        return VerifierSpec(kind, k=k)
    if member == "g7":
        return VerifierSpec(kind, k=k, d=d, tree_exception=True)
    return VerifierSpec(kind)


def harmonious_labels(G: Graph, f: Labeling, member: str, k: int = 1, d: int = 1) -> Labeling:
    """The raw formula output, without post-verification."""
    if member not in HARMONIOUS_TARGETS:
        raise TransformError(f"unknown family member {member!r}")
    C = canonical(G, f)
    if member == "g6" and abs(C.s - C.t) != 1:
        raise TransformError("g6 needs |s-t| = 1")
    fx = lambda a: a
    fy = lambda a: a
    if member in ("g2",):
        fx, fy = (lambda a: 2 * a), (lambda a: 2 * a)
    elif member in ("g3", "g6"):
        fx, fy = (lambda a: 2 * a), (lambda a: 2 * a - 1)
    elif member == "g4":
        fx, fy = (lambda a: 2 * k * a), (lambda a: 2 * k * a)
    elif member == "g7":
        fx, fy = (lambda a: d * a), (lambda a: k + d * a)
    vert = list(f.vertex)
    for x in C.xs:
        vert[x] = fx(f.vertex[x])
    for j, y in enumerate(C.ys, 1):
        vert[y] = fy(C.y_rev(j))
    return Labeling(tuple(vert))


def harmonious_family(G: Graph, f: Labeling, member: str, k: int = 1, d: int = 1) -> Labeling:
    g = harmonious_labels(G, f, member, k, d)
    _check(G, g, harmonious_spec(member, k, d), member)
    return g


# ---------------------------------------------------------------------------
# equivalences from set-ordered graceful labelings

EQUIVALENT_TARGETS = ("odd-graceful", "edge-magic-total", "odd-even-separable-emt", "odd-elegant")


def equivalent_transform(G: Graph, f: Labeling, target: str) -> Labeling:
    C = canonical(G, f)
    s, p, q = C.s, G.p, G.q
    fv = f.vertex
    vert = list(fv)
    X = set(C.xs)
    if target == "odd-graceful":
        for v in range(p):
            vert[v] = 2 * fv[v] if v in X else 2 * fv[v] - 1
        g = Labeling(tuple(vert))
        _check(G, g, VerifierSpec("odd-graceful"), target)
        return Labeling(g.vertex, tuple(induced_colors(G, g)))
    if target == "edge-magic-total":
        # x_i takes f(x_{s-i+1})+1, y keeps f(y)+1, edges run down from p+q
        for v in range(p):
            vert[v] = s - fv[v] if v in X else fv[v] + 1
        edges = tuple(p + q + 1 - abs(fv[a] - fv[b]) for a, b in G.edges)
        g = Labeling(tuple(vert), edges)
        _check(G, g, VerifierSpec("super-edge-magic-total"), target)
        return g
    if target == "odd-even-separable-emt":
        for v in range(p):
            vert[v] = 2 * (s - 1 - fv[v]) + 1 if v in X else 2 * fv[v] + 1
        edges = tuple(2 * (q + 1 - abs(fv[a] - fv[b])) for a, b in G.edges)
        g = Labeling(tuple(vert), edges)
        _check(G, g, VerifierSpec("odd-even-separable-emt"), target)
        return g
    if target == "odd-elegant":
        for v in range(p):
            vert[v] = 2 * (s - 1 - fv[v]) if v in X else 2 * fv[v] - 1
        g = Labeling(tuple(vert))
        _check(G, g, VerifierSpec("odd-elegant"), target)
        return g
    raise TransformError(f"unknown target {target!r}")


def kd_graceful_from_graceful(G: Graph, f: Labeling, k: int, d: int) -> Labeling:
    """d*f on X, k-d+d*f on Y; edge colors become k+d(f(xy)-1)."""
    if k < 1 or d < 1:
        raise TransformError("need k >= 1 and d >= 1")
    C = canonical(G, f)
    X = set(C.xs)
    vert = tuple(d * c if v in X else k - d + d * c for v, c in enumerate(f.vertex))
    g = Labeling(vert)
    _check(G, g, VerifierSpec("kd-graceful", k=k, d=d), "kd_graceful_from_graceful")
    return g


def image_pair(G: Graph, f: Labeling, k: int) -> Labeling:
    """Partner f2 of a set-ordered labeling with f(uv) + f2(uv) = k on every edge."""
    B = bipartition(G)
    if B is None:
        raise TransformError("graph is not bipartite")
    fv = f.vertex
    X, Y = sorted(B.X), sorted(B.Y)
    if X and Y and max(fv[v] for v in X) > min(fv[v] for v in Y):
        X, Y = Y, X
    if X and Y and max(fv[v] for v in X) >= min(fv[v] for v in Y):
        raise TransformError("labeling is not set-ordered")
    ec = induced_colors(G, f)
    if ec and k <= max(ec):
        raise TransformError(f"k={k} must exceed the largest edge color {max(ec)}")
    lo, hi = min(fv[v] for v in X), max(fv[v] for v in X)
    Xs = set(X)
    vert = tuple(hi + lo - c if v in Xs else k + hi + lo - c for v, c in enumerate(fv))
    g = Labeling(vert)
    if min(vert, default=0) < 0:
        raise TransformError("mirror would need negative labels")
    if any(a + b != k for a, b in zip(ec, induced_colors(G, g))):
        raise TransformError("mirror check failed")
    return g


def leaf_add_kd(G: Graph, f: Labeling, leaf_counts: Mapping[int, int], k: int, d: int):
    """Attach leaves and extend a (k,d)-gracefully total coloring.

    X is the side holding color 0.  Existing Y colors and edge colors move up
    by (A+B)d where A, B count the new leaves on X and Y.  New edges are
    numbered x-leaves first then y-leaves, each side in ascending color order,
    and take colors k, k+d, ...
    """
    if f.edge is None:
        raise TransformError("need a total coloring")
    spec = VerifierSpec("kd-graceful-total", k=k, d=d)
    if not verify(G, f, spec).passed:
        raise TransformError("input is not a (k,d)-gracefully total coloring")
    B = bipartition(G)
    zeros = [v for v in range(G.p) if f.vertex[v] == 0]
    if not zeros:
        raise TransformError("preparation needs f(x_1) = 0")
    X = B.X if zeros[0] in B.X else B.Y
    Y = set(range(G.p)) - set(X)
    xs = sorted(X, key=lambda v: (f.vertex[v], v))
    ys = sorted(Y, key=lambda v: (f.vertex[v], v))
    counts = {int(v): int(c) for v, c in leaf_counts.items()}
    if any(c < 0 or not 0 <= v < G.p for v, c in counts.items()):
        raise TransformError("bad leaf counts")
    A = sum(counts.get(v, 0) for v in xs)
    Bc = sum(counts.get(v, 0) for v in ys)
    shift = (A + Bc) * d
    vert = [c if v in X else c + shift for v, c in enumerate(f.vertex)]
    edges_col = [c + shift for c in f.edge]
    new_edges = []
    r = 0
    for support in xs + ys:
        for _ in range(counts.get(support, 0)):
            r += 1
            ec = k + (r - 1) * d
            leaf = len(vert)
            vert.append(vert[support] + ec if support in X else vert[support] - ec)
            new_edges.append((support, leaf))
            edges_col.append(ec)
    H = Graph(len(vert), G.edges + tuple(new_edges))
    g = Labeling(tuple(vert), tuple(edges_col))
    _check(H, g, spec, "leaf_add_kd")
    return H, g
