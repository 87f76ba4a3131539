"""Topcode-matrices: construction, classification, structure and number strings.

A Topcode-matrix is a 3 x q integer array whose columns (x_i, e_i, y_i)
record one colored edge and the colors of its two ends.  Number strings
are the decimal renderings of its entries concatenated along a route.
"""

from __future__ import annotations

import functools
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Union

import numpy as np

from .graph import Graph, bipartition
from .labelings import EdgeRule, Labeling, VerifierSpec, induced_colors, odd_set


class TopcodeError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class TopcodeMatrix:
    """Rows X, E, Y as a read-only (3, q) int64 array."""

    data: np.ndarray
    rule: Optional[EdgeRule] = field(default=None, compare=False)

    def __post_init__(self):
        a = np.asarray(self.data, dtype=np.int64)
        if a.size == 0:
            a = a.reshape(3, 0)
        if a.ndim != 2 or a.shape[0] != 3:
            raise TopcodeError(f"need a 3 x q array, got shape {a.shape}")
        if (a < 0).any():
            raise TopcodeError("entries must be non-negative")
        a = a.copy()
        a.flags.writeable = False
        object.__setattr__(self, "data", a)

    @classmethod
    def from_rows(cls, X: Sequence[int], E: Sequence[int], Y: Sequence[int], rule=None) -> "TopcodeMatrix":
        if not len(X) == len(E) == len(Y):
            raise TopcodeError("rows must have equal length")
        return cls(np.array([list(X), list(E), list(Y)], dtype=np.int64).reshape(3, len(X)), rule)

    @classmethod
    def empty(cls) -> "TopcodeMatrix":
        return cls(np.zeros((3, 0), dtype=np.int64))

    @property
    def q(self) -> int:
        return self.data.shape[1]

    @property
    def X(self) -> tuple[int, ...]:
        return tuple(int(a) for a in self.data[0])

    @property
    def E(self) -> tuple[int, ...]:
        return tuple(int(a) for a in self.data[1])

    @property
    def Y(self) -> tuple[int, ...]:
        return tuple(int(a) for a in self.data[2])

    def columns(self) -> list[tuple[int, int, int]]:
        return [tuple(int(a) for a in col) for col in self.data.T]

    @property
    def evaluated(self) -> bool:
        """True when a rule is attached and e_i = rule(x_i, y_i) on every column."""
        if self.rule is None:
            return False
        return all(e == self.rule(x, y) for x, e, y in self.columns())

    def vertex_values(self) -> list[int]:
        return sorted(set(self.X) | set(self.Y))

    def __eq__(self, other):
        if not isinstance(other, TopcodeMatrix):
            return NotImplemented
        return np.array_equal(self.data, other.data)

    def __hash__(self):
        return hash(self.data.tobytes()) ^ self.q

    def same_columns(self, other: "TopcodeMatrix") -> bool:
        """Equality up to column order."""
        return sorted(self.columns()) == sorted(other.columns())

    def __repr__(self):
        return f"TopcodeMatrix(X={list(self.X)}, E={list(self.E)}, Y={list(self.Y)})"

    def to_json(self) -> dict:
        return {"X": list(self.X), "E": list(self.E), "Y": list(self.Y)}

    @classmethod
    def from_json(cls, doc: dict) -> "TopcodeMatrix":
        try:
            return cls.from_rows(doc["X"], doc["E"], doc["Y"])
        except KeyError as exc:
            raise TopcodeError(f"matrix JSON missing row {exc}") from None


# ---------------------------------------------------------------------------
# construction

_KIND_RULES: dict[str, Callable[[int], EdgeRule]] = {
    "harmonious": lambda q: EdgeRule("sum-mod", m=max(q, 1)),
    "felicitous": lambda q: EdgeRule("sum-mod", m=max(q, 1)),
    "odd-elegant": lambda q: EdgeRule("sum-mod", m=2 * q),
    "even-harmonious": lambda q: EdgeRule("sum-mod", m=2 * q),
    "odd-harmonious": lambda q: EdgeRule("sum-mod", m=2 * q),
    "strongly-odd-harmonious": lambda q: EdgeRule("sum-mod", m=2 * q),
    "strongly-c-harmonious": lambda q: EdgeRule("sum"),
    "kd-arithmetic": lambda q: EdgeRule("sum"),
    "gcd-graceful": lambda q: EdgeRule("gcd"),
    "gcd-odd-graceful": lambda q: EdgeRule("gcd"),
}

_SET_ORDERED = {"set-ordered-graceful", "set-ordered-odd-graceful"}


def rule_for(spec: Optional[VerifierSpec], q: int) -> EdgeRule:
    if spec is None:
        return EdgeRule("abs-diff")
    if spec.rule is not None:
        return spec.rule
    if spec.kind == "kd-harmonious":
        return EdgeRule("sum-plus-mod*", m=q * spec.d, k=spec.k)
    if spec.kind == "k-even-sequential":
        return EdgeRule("sum-eps-mod*", m=2 * q * spec.k, k=2 * spec.k)
    make = _KIND_RULES.get(spec.kind)
    return make(q) if make else EdgeRule("abs-diff")


def from_labeled_graph(G: Graph, f: Labeling, spec: Optional[VerifierSpec] = None,
                       rule: Optional[EdgeRule] = None) -> TopcodeMatrix:
    """One column per edge, sorted by edge color then (min end, max end).

    Edge colors come from f.edge when present, otherwise they are induced by
    `rule` (or the rule implied by `spec`, default |f(u)-f(v)|).  Within a
    column x <= y, except for set-ordered specs where x is the X-side color.
    """
    if len(f.vertex) != G.p or any(c is None for c in f.vertex):
        raise TopcodeError("every vertex must be colored")
    if f.edge is not None and (len(f.edge) != G.q or any(c is None for c in f.edge)):
        raise TopcodeError("every edge must be colored")
    rule = rule or rule_for(spec, G.q)
    E = list(f.edge) if f.edge is not None else induced_colors(G, f, rule)
    V = f.vertex
    side = None
    if spec is not None and spec.kind in _SET_ORDERED:
        B = bipartition(G)
        if B is None:
            raise TopcodeError("set-ordered spec needs a bipartite graph")
        X = B.X
        if X and B.Y and max(V[v] for v in X) > min(V[v] for v in B.Y):
            X = B.Y
        side = X
    cols = []
    for i, (u, v) in enumerate(G.edges):
        a, b = V[u], V[v]
        if side is not None:
            if v in side:
                a, b = b, a
        elif a > b:
            a, b = b, a
        cols.append((a, E[i], b))
    cols.sort(key=lambda c: (c[1], min(c[0], c[2]), max(c[0], c[2])))
    if not cols:
        return TopcodeMatrix.empty()
    data = np.array(cols, dtype=np.int64).T
    return TopcodeMatrix(data, rule if f.edge is None else None)


def to_labeled_graph(T: TopcodeMatrix) -> tuple[Graph, Labeling]:
    """The graph on value-vertices (XY)*, each vertex colored by its value.

    Fails when the columns describe a loop or a repeated pair.
    """
    vals = T.vertex_values()
    idx = {w: i for i, w in enumerate(vals)}
    edges = [(idx[x], idx[y]) for x, _, y in T.columns()]
    G = Graph(len(vals), tuple(edges))
    return G, Labeling(tuple(vals), T.E)


def union(T1: TopcodeMatrix, T2: TopcodeMatrix) -> TopcodeMatrix:
    """Column concatenation, T1 first."""
    return TopcodeMatrix(np.concatenate([T1.data, T2.data], axis=1))


# ---------------------------------------------------------------------------
# classification

@dataclass(frozen=True, order=True)
class Tag:
    name: str
    constant: Optional[int] = None

    def __str__(self):
        return self.name if self.constant is None else f"{self.name}({self.constant})"


def conditions(T: TopcodeMatrix, k: Optional[int] = None) -> dict:
    """Evaluate the eighteen column conditions.  Constant conditions report the detected k or None."""
    q = T.q
    X, E, Y = T.data
    XY = set(T.X) | set(T.Y)
    Es = set(T.E)
    p = len(XY)

    def const(vals):
        vals = [int(a) for a in vals]
        if not vals:
            return None
        c = vals[0] if k is None else k
        return c if all(v == c for v in vals) else None

    diff = np.abs(X - Y)
    return {
        1: XY == set(range(p)) and p <= q + 1,
        2: p <= q + 1,
        3: XY <= set(range(q + 1)),
        4: XY <= set(range(2 * q)),
        5: XY <= set(range(2 * q + 1)),
        6: XY | Es == set(range(1, p + q + 1)),
        7: Es == set(range(1, q + 1)),
        8: Es == set(odd_set(2 * q - 1)),
        9: XY == set(range(1, p + 1)) and Es == set(range(p + 1, p + q + 1)),
        10: bool((E == diff).all()) and Es == set(range(1, q + 1)),
        11: bool((E == diff).all()) and Es == set(odd_set(2 * q - 1)),
        12: q > 0 and bool((E == (X + Y) % (2 * q)).all()) and Es == set(odd_set(2 * q - 1)),
        13: q > 0 and bool((E == (X + Y) % q).all()) and Es == set(range(q)),
        14: const(X + E + Y),
        15: const(E + diff),
        16: const(np.abs(X + Y - E)),
        17: const(np.abs(E - diff)),
        18: q > 0 and int(X.max()) < int(Y.min()),
    }


def classify(T: TopcodeMatrix) -> set[Tag]:
    if T.q == 0:
        return set()
    c = conditions(T)
    tags: set[Tag] = set()
    if c[3] and c[7] and c[10]:
        tags.add(Tag("graceful"))
        if c[18]:
            tags.add(Tag("set-ordered-graceful"))
    if c[4] and c[8] and c[11]:
        tags.add(Tag("odd-graceful"))
        if c[18]:
            tags.add(Tag("set-ordered-odd-graceful"))
    if c[14] is not None:
        tags.add(Tag("edge-magic-total", c[14]))
    if c[6] and c[15] is not None:
        tags.add(Tag("edge-difference", c[15]))
    if c[7] and c[16] is not None:
        tags.add(Tag("felicitous-difference", c[16]))
    if c[7] and c[17] is not None:
        tags.add(Tag("graceful-difference", c[17]))
    if c[1] and c[13]:
        tags.add(Tag("elegant"))
    if c[4] and c[12]:
        tags.add(Tag("odd-elegant"))
    if c[3] and c[13]:
        tags.add(Tag("harmonious"))
    return tags


def tag_names(tags: Iterable[Tag]) -> set[str]:
    return {t.name for t in tags}


# ---------------------------------------------------------------------------
# structure

@dataclass(frozen=True)
class Structure:
    vertices: tuple[int, ...]
    degrees: dict
    connected: bool
    euler: bool
    perfect_matching: Optional[tuple[int, ...]]
    hamilton: Optional[bool]

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "degrees": {str(k): v for k, v in self.degrees.items()},
            "connected": self.connected,
            "euler": self.euler,
            "perfectMatching": None if self.perfect_matching is None else list(self.perfect_matching),
            "hamilton": self.hamilton,
        }


HAMILTON_LIMIT = 10


def analyze(T: TopcodeMatrix) -> Structure:
    """Value multigraph report.

    Euler means every value occurs an even number of times (and the value
    graph is connected).  The perfect matching is a set of column indices
    with pairwise disjoint ends covering (XY)*.  Hamilton cycle existence is
    decided by brute force when |(XY)*| <= 10 and reported as None above.
    """
    vals = T.vertex_values()
    cols = T.columns()
    deg = {w: 0 for w in vals}
    adj = {w: set() for w in vals}
    for x, _, y in cols:
        deg[x] += 1
        deg[y] += 1
        adj[x].add(y)
        adj[y].add(x)
    connected = _connected(vals, adj)
    euler = bool(vals) and connected and all(d % 2 == 0 for d in deg.values())
    matching = _perfect_matching(vals, cols)
    ham = _hamilton(vals, adj) if len(vals) <= HAMILTON_LIMIT else None
    return Structure(tuple(vals), deg, connected, euler, matching, ham)


def _connected(vals, adj) -> bool:
    if not vals:
        return True
    seen = {vals[0]}
    stack = [vals[0]]
    while stack:
        w = stack.pop()
        for z in adj[w] - seen:
            seen.add(z)
            stack.append(z)
    return len(seen) == len(vals)


def _perfect_matching(vals, cols) -> Optional[tuple[int, ...]]:
    if len(vals) % 2:
        return None
    by_end: dict[int, list[int]] = {w: [] for w in vals}
    for i, (x, _, y) in enumerate(cols):
        if x != y:
            by_end[x].append(i)
            by_end[y].append(i)

    def go(free: frozenset) -> Optional[list[int]]:
        if not free:
            return []
        w = min(free)
        for i in by_end[w]:
            x, _, y = cols[i]
            other = y if x == w else x
            if other in free:
                rest = go(free - {w, other})
                if rest is not None:
                    return [i] + rest
        return None

    found = go(frozenset(vals))
    return None if found is None else tuple(sorted(found))


def _hamilton(vals, adj) -> bool:
    n = len(vals)
    if n < 3:
        return False
    start = vals[0]
    full = (1 << n) - 1
    pos = {w: i for i, w in enumerate(vals)}

    @functools.lru_cache(maxsize=None)
    def reach(mask: int, w: int) -> bool:
        if mask == full:
            return start in adj[w]
        return any(not mask >> pos[z] & 1 and reach(mask | 1 << pos[z], z) for z in adj[w])

    return reach(1, start)


# ---------------------------------------------------------------------------
# number strings

ROUTES = ("O1", "O2", "O3", "O4")
VARIANTS = ("base", "reciprocal", "inverse")

Cell = tuple[str, int]  # row name and 1-based column index


def _o3_cells(q: int) -> list[Cell]:
    """y2 y1 e1 x1 e2 y3 y4 e3 x2 x3 e4 y5 y6 e5 x4 x5 ... cut to indices <= q."""
    seq: list[Cell] = [("y", 2), ("y", 1), ("e", 1), ("x", 1)]
    e, y, x = 2, 3, 2
    while len([c for c in seq if c[1] <= q]) < 3 * q:
        seq += [("e", e), ("y", y), ("y", y + 1), ("e", e + 1), ("x", x), ("x", x + 1)]
        e, y, x = e + 2, y + 2, x + 2
    cells = [c for c in seq if c[1] <= q]
    # the printed tail for even q runs ... x_{q-2} x_{q-1} x_q e_q
    if q >= 2 and q % 2 == 0 and cells[-2:] == [("e", q), ("x", q)]:
        cells[-2:] = [("x", q), ("e", q)]
    return cells


def route_cells(q: int, route: str) -> list[Cell]:
    route = route.upper()
    if route == "O1":
        return ([("x", i) for i in range(1, q + 1)] + [("e", i) for i in range(q, 0, -1)]
                + [("y", i) for i in range(1, q + 1)])
    if route == "O2":
        out: list[Cell] = []
        for i in range(1, q + 1):
            trip = [("x", i), ("e", i), ("y", i)]
            out += trip if i % 2 else trip[::-1]
        return out
    if route == "O3":
        return _o3_cells(q)
    if route == "O4":
        return [c for i in range(1, q + 1) for c in (("x", i), ("e", i), ("y", i))]
    raise TopcodeError(f"unknown route {route!r}")


def _apply_variant(cells: list[Cell], q: int, variant: str) -> list[Cell]:
    if variant == "base":
        return cells
    if variant == "reciprocal":
        swap = {"x": "y", "y": "x", "e": "e"}
        return [(swap[r], i) for r, i in cells]
    if variant == "inverse":
        return [(r, q + 1 - i) for r, i in cells]
    raise TopcodeError(f"unknown variant {variant!r}")


def emit_cells(T: TopcodeMatrix, route: Union[str, Sequence[int]] = "O1", variant: str = "base") -> list[int]:
    """Entries in route order.

    A permutation route is a sequence of 3q flat cell indices, row-major
    over rows X, E, Y (cell r*q + (i-1) is row r, column i).
    """
    q = T.q
    if isinstance(route, str):
        cells = route_cells(q, route)
    else:
        perm = [int(a) for a in route]
        if sorted(perm) != list(range(3 * q)):
            raise TopcodeError("permutation route must list each of the 3q cells once")
        cells = [("xey"[a // q], a % q + 1) for a in perm]
    cells = _apply_variant(cells, q, variant)
    row = {"x": 0, "e": 1, "y": 2}
    return [int(T.data[row[r], i - 1]) for r, i in cells]


def emit_string(T: TopcodeMatrix, route: Union[str, Sequence[int]] = "O1", variant: str = "base") -> str:
    return "".join(str(a) for a in emit_cells(T, route, variant))


# ---------------------------------------------------------------------------
# string partition

PARTITION_CAP = 5
ROW_LIMIT = 5_000_000


def count_segmentations(s: str, n: int) -> int:
    """Number of ways to cut s into n decimal numbers without leading zeros."""
    L = len(s)
    # ways[i][k]: cuts of s[i:] into k numbers
    ways = [[0] * (n + 1) for _ in range(L + 1)]
    ways[L][0] = 1
    for i in range(L - 1, -1, -1):
        ends = [i + 1] if s[i] == "0" else range(i + 1, L + 1)
        for k in range(1, n + 1):
            ways[i][k] = sum(ways[j][k - 1] for j in ends)
    return ways[0][n]


def segmentations(s: str, n: int, limit: int = ROW_LIMIT) -> np.ndarray:
    """All cuts of s into n numbers as an (N, n) int64 array, in lexicographic cut order.

    A segment may be "0" but never starts with 0 otherwise.
    """
    L = len(s)
    total = count_segmentations(s, n)
    if total > limit:
        raise TopcodeError(f"{total} segmentations exceed the limit {limit}")
    if total == 0 or n == 0:
        return np.zeros((0, n), dtype=np.int64)
    if L - n + 1 > 18:
        raise TopcodeError("segments longer than 18 digits are not supported")
    zero = np.array([c == "0" for c in s] + [False])
    digits = np.array([int(c) for c in s], dtype=np.int64)
    # val[a, b] = int(s[a:b]) for b - a <= 18
    val = np.zeros((L + 1, L + 1), dtype=np.int64)
    for a in range(L):
        acc = 0
        for b in range(a + 1, min(L, a + 18) + 1):
            acc = acc * 10 + int(digits[b - 1])
            val[a, b] = acc

    starts = np.zeros(1, dtype=np.int64)
    cols = []
    for k in range(1, n + 1):
        last = k == n
        lo = starts + 1
        hi = np.full_like(starts, L) if last else np.full_like(starts, L - (n - k))
        hi = np.where(zero[starts], lo, hi)
        if last:
            ok = (hi == L) & (lo <= L)
            lo, hi = np.full_like(starts, L), np.where(ok, L, L - 1)
        counts = np.maximum(hi - lo + 1, 0)
        rep = np.repeat(np.arange(len(starts)), counts)
        offs = np.arange(counts.sum()) - np.repeat(np.cumsum(counts) - counts, counts)
        ends = lo[rep] + offs
        cols = [c[rep] for c in cols] + [val[starts[rep], ends]]
        starts = ends
    out = np.stack(cols, axis=1) if cols else np.zeros((0, n), dtype=np.int64)
    assert len(out) == total
    return out


def _prefilter(data: np.ndarray, kind: str) -> np.ndarray:
    """Cheap necessary conditions for a tag over an (N, 3, q) stack; classify settles the rest."""
    X, E, Y = data[:, 0], data[:, 1], data[:, 2]
    q = data.shape[2]
    if kind in ("graceful", "set-ordered-graceful"):
        want = np.arange(1, q + 1)
    elif kind in ("odd-graceful", "set-ordered-odd-graceful"):
        want = np.arange(1, 2 * q, 2)
    elif kind == "edge-magic-total":
        S = X + E + Y
        return (S == S[:, :1]).all(axis=1)
    else:
        return np.ones(len(data), dtype=bool)
    return (E == np.abs(X - Y)).all(axis=1) & (np.sort(E, axis=1) == want).all(axis=1)


class MatrixList(Sequence):
    """Read-only list of same-size Topcode-matrices backed by one (N, 3, q) array."""

    def __init__(self, data: np.ndarray):
        self.data = data

    def __len__(self):
        return len(self.data)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return MatrixList(self.data[i])
        return TopcodeMatrix(self.data[i])

    def __contains__(self, T) -> bool:
        if not isinstance(T, TopcodeMatrix) or len(self.data) == 0 or T.data.shape != self.data.shape[1:]:
            return False
        return bool((self.data == T.data[None]).all(axis=(1, 2)).any())

    def __eq__(self, other):
        if isinstance(other, MatrixList):
            return np.array_equal(self.data, other.data)
        if isinstance(other, (list, tuple)):
            return len(other) == len(self) and all(a == b for a, b in zip(self, other))
        return NotImplemented

    def __repr__(self):
        return f"MatrixList({len(self)} matrices)"


def partition_string(s: str, q: int, kind: Optional[str] = None, route: str = "O1",
                     variant: str = "base", cap: int = PARTITION_CAP,
                     limit: int = ROW_LIMIT) -> MatrixList:
    """Every size-q matrix whose route string equals s, optionally filtered by class tag.

    Distinct cuts give distinct matrices because no segment carries a
    leading zero, so the result has no duplicates.  Order follows the cut
    positions lexicographically.
    """
    if not s.isdigit():
        raise TopcodeError("string must be decimal digits")
    if q < 1:
        raise TopcodeError("q must be at least 1")
    if q > cap:
        raise TopcodeError(f"q={q} exceeds the partition cap {cap}")
    cells = _apply_variant(route_cells(q, route), q, variant)
    row = {"x": 0, "e": 1, "y": 2}
    # where each cut number lands in the flattened (3, q) matrix
    target = np.array([row[r] * q + (i - 1) for r, i in cells])
    nums = segmentations(s, 3 * q, limit)
    flat = np.empty_like(nums)
    flat[:, target] = nums
    data = flat.reshape(-1, 3, q)
    if kind is not None:
        keep = [int(t) for t in np.flatnonzero(_prefilter(data, kind))
                if kind in tag_names(classify(TopcodeMatrix(data[t])))]
        data = data[keep]
    return MatrixList(data)
