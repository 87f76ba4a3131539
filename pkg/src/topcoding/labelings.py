"""Labeling and coloring predicates.

`verify` checks a labeling against a `VerifierSpec` and returns a report
listing every failed condition with a witness.  Composite definitions
(6C, twin pairs, flawed labelings) have their own verifiers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Optional, Sequence

from .graph import Graph, GraphError, bipartition, disjoint_union, add_edges


class LabelingError(ValueError):
    """Shape mismatch between a labeling, its graph, and a spec."""


@dataclass(frozen=True)
class Labeling:
    vertex: tuple[int, ...]
    edge: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "vertex", tuple(int(c) for c in self.vertex))
        if self.edge is not None:
            object.__setattr__(self, "edge", tuple(int(c) for c in self.edge))

    @property
    def is_total(self) -> bool:
        return self.edge is not None

    def check_shape(self, G: Graph) -> None:
        if len(self.vertex) != G.p:
            raise LabelingError(f"labeling colors {len(self.vertex)} vertices, graph has {G.p}")
        if self.edge is not None and len(self.edge) != G.q:
            raise LabelingError(f"labeling colors {len(self.edge)} edges, graph has {G.q}")

    def to_json(self) -> dict:
        return {"vertex": list(self.vertex), "edge": None if self.edge is None else list(self.edge)}

    @classmethod
    def from_json(cls, doc: dict) -> "Labeling":
        return cls(tuple(doc["vertex"]), None if doc.get("edge") is None else tuple(doc["edge"]))


# ---------------------------------------------------------------------------
# induced edge colors

@dataclass(frozen=True)
class EdgeRule:
    name: str  # abs-diff | sum | sum-mod | gcd | sum-plus-mod* | sum-eps-mod*
    m: int = 0
    k: int = 0

    def __call__(self, a: int, b: int) -> int:
        if self.name == "abs-diff":
            return abs(a - b)
        if self.name == "sum":
            return a + b
        if self.name == "sum-mod":
            return (a + b) % self.m
        if self.name == "gcd":
            return math.gcd(a, b)
        if self.name == "sum-plus-mod*":
            return self.k + (a + b - self.k) % self.m
        if self.name == "sum-eps-mod*":
            s = a + b
            s += s % 2
            return self.k + (s - self.k) % self.m
        raise LabelingError(f"unknown edge rule {self.name!r}")

    @classmethod
    def parse(cls, text: str) -> "EdgeRule":
        """'abs-diff', 'gcd', 'sum', 'sum-mod:6', 'sum-plus-mod*:k:m'."""
        parts = text.split(":")
        name = parts[0]
        want = {"abs-diff": 0, "sum": 0, "gcd": 0, "sum-mod": 1, "sum-plus-mod*": 2, "sum-eps-mod*": 2}
        if name not in want:
            raise LabelingError(f"unknown edge rule {name!r}")
        try:
            nums = [int(x) for x in parts[1:]]
        except ValueError:
            nums = []
        if len(nums) != want[name] or any(m < 1 for m in nums[-1:]):
            raise LabelingError(f"bad parameters for edge rule {text!r}")
        if name == "sum-mod":
            return cls(name, m=nums[0])
        if name in ("sum-plus-mod*", "sum-eps-mod*"):
            return cls(name, k=nums[0], m=nums[1])
        return cls(name)


ABS_DIFF = EdgeRule("abs-diff")


def induced_edge_color(f: Labeling, rule: EdgeRule, e: tuple[int, int]) -> int:
    u, v = e
    if not (0 <= u < len(f.vertex) and 0 <= v < len(f.vertex)):
        raise LabelingError(f"edge ({u},{v}) has an uncolored endpoint")
    if rule.name in ("sum-mod", "sum-plus-mod*", "sum-eps-mod*") and rule.m < 1:
        raise LabelingError("modulus must be >= 1")
    return rule(f.vertex[u], f.vertex[v])


def induced_colors(G: Graph, f: Labeling, rule: EdgeRule = ABS_DIFF) -> list[int]:
    return [induced_edge_color(f, rule, e) for e in G.edges]


def odd_set(n: int) -> list[int]:
    """[1, n]^o."""
    return list(range(1, n + 1, 2))


def progression(k: int, d: int, q: int) -> list[int]:
    """S(k,d) = {k, k+d, ..., k+(q-1)d}."""
    return [k + i * d for i in range(q)]


# ---------------------------------------------------------------------------
# specs and reports

INDUCED_KINDS = {
    "graceful", "odd-graceful", "set-ordered-graceful", "set-ordered-odd-graceful",
    "strongly-graceful", "strongly-odd-graceful", "k-graceful", "kd-graceful",
    "kd-arithmetic", "kd-harmonious", "felicitous", "harmonious", "odd-elegant",
    "gcd-graceful", "gcd-odd-graceful", "custom", "even-harmonious", "odd-harmonious",
    "k-even-sequential", "strongly-c-harmonious", "strongly-odd-harmonious",
}
TOTAL_KINDS = {
    "kd-edge-antimagic-total", "edge-magic-total", "super-edge-magic-total",
    "edge-magic-graceful", "edge-magic-total-graceful", "k-lambda-magic", "total-graceful",
    "edge-difference", "graceful-difference", "felicitous-difference", "kd-graceful-total",
    "odd-even-separable-emt",
}
KINDS = INDUCED_KINDS | TOTAL_KINDS


@dataclass(frozen=True)
class VerifierSpec:
    """A labeling family plus its parameters.

    ``coloring`` relaxes total kinds to colorings: the bijection onto
    [1, p+q] is dropped and only the edge equation is enforced.
    ``c`` pins a magic constant; left as None the constant is detected.
    """

    kind: str
    k: Optional[int] = None
    d: Optional[int] = None
    lam: Optional[int] = None
    c: Optional[int] = None
    tree_exception: bool = False
    coloring: bool = False
    target: Optional[tuple[int, ...]] = None
    rule: Optional[EdgeRule] = None
    injective: bool = True
    matching: Optional[tuple[tuple[int, int], ...]] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise LabelingError(f"unknown labeling kind {self.kind!r}")
        if self.d is not None and self.d < 1:
            raise LabelingError("d must be >= 1")
        if self.kind == "k-lambda-magic" and not self.lam:
            raise LabelingError("k-lambda-magic needs a nonzero lambda")
        needs_k = {"k-graceful", "kd-graceful", "kd-arithmetic", "kd-edge-antimagic-total",
                   "kd-harmonious", "k-even-sequential", "kd-graceful-total"}
        if self.kind in needs_k and self.k is None:
            raise LabelingError(f"{self.kind} needs k")
        if self.kind.startswith("kd-") and self.d is None:
            raise LabelingError(f"{self.kind} needs d")
        if self.kind == "custom" and self.target is None:
            raise LabelingError("custom spec needs a target edge set")

    @property
    def total(self) -> bool:
        return self.kind in TOTAL_KINDS

    def to_json(self) -> dict:
        doc = {"kind": self.kind}
        for name in ("k", "d", "lam", "c", "target"):
            val = getattr(self, name)
            if val is not None:
                doc[name] = list(val) if name == "target" else val
        if self.tree_exception:
            doc["treeException"] = True
        if self.coloring:
            doc["coloring"] = True
        if self.rule is not None:
            doc["rule"] = self.rule.name
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "VerifierSpec":
        rule = doc.get("rule")
        return cls(
            kind=doc["kind"], k=doc.get("k"), d=doc.get("d"), lam=doc.get("lam", doc.get("lambda")),
            c=doc.get("c"), tree_exception=bool(doc.get("treeException", False)),
            coloring=bool(doc.get("coloring", False)),
            target=None if doc.get("target") is None else tuple(doc["target"]),
            rule=None if rule is None else EdgeRule.parse(rule),
            injective=bool(doc.get("injective", True)),
        )


@dataclass(frozen=True)
class VerifyReport:
    failures: tuple[tuple[str, object], ...] = ()
    derived_constant: Optional[int] = None
    info: dict = field(default_factory=dict, compare=False)

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        doc = {"pass": self.passed, "failures": [[c, _jsonable(w)] for c, w in self.failures]}
        if self.derived_constant is not None:
            doc["derivedConstant"] = self.derived_constant
        if self.info:
            doc["info"] = {k: _jsonable(v) for k, v in self.info.items()}
        return doc


def _jsonable(x):
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


# ---------------------------------------------------------------------------
# condition checks; each appends (condition-id, witness) to `out`

def _injective(vals: Sequence[int], out: list, cid: str = "injective") -> None:
    seen = {}
    for i, c in enumerate(vals):
        if c in seen:
            out.append((cid, (seen[c], i, c)))
            return
        seen[c] = i


def _in_range(vals: Sequence[int], lo: int, hi: int, out: list, cid: str) -> None:
    for i, c in enumerate(vals):
        if not lo <= c <= hi:
            out.append((cid, (i, c)))
            return


def _same_multiset(got: Sequence[int], want: Sequence[int], out: list, cid: str) -> None:
    got_s, want_s = sorted(got), sorted(want)
    if got_s != want_s:
        missing = sorted(set(want_s) - set(got_s))
        extra = [c for c in got_s if c not in set(want_s)]
        dup = sorted({c for c in got_s if got_s.count(c) > 1})
        out.append((cid, {"missing": missing, "extra": extra, "repeated": dup}))


def _constant(values: Sequence[int], fixed: Optional[int], out: list, cid: str) -> Optional[int]:
    if not values:
        return fixed
    c = values[0] if fixed is None else fixed
    for i, v in enumerate(values):
        if v != c:
            out.append((cid, (i, v, c)))
            break
    return values[0]


def _set_ordered(G: Graph, vals: Sequence[int], out: list) -> None:
    B = bipartition(G)
    if B is None:
        out.append(("B-6 bipartite", None))
        return
    if not B.X or not B.Y:
        return
    X = [vals[v] for v in B.X]
    Y = [vals[v] for v in B.Y]
    if not (max(X) < min(Y) or max(Y) < min(X)):
        out.append(("B-6 set-ordered", (max(X), min(Y))))


def _find_matching(G: Graph, vals: Sequence[int], total: int):
    """Perfect matching of edges whose end labels sum to `total`, or None."""
    mate = {}
    for u, v in G.edges:
        if vals[u] + vals[v] == total:
            if u in mate or v in mate:
                return None
            mate[u], mate[v] = v, u
    if len(mate) != G.p:
        return None
    return tuple(sorted((min(u, v), max(u, v)) for u, v in mate.items() if u < v))


def _strong(G: Graph, vals, total: int, spec: VerifierSpec, out: list, cid: str):
    if not G.is_tree():
        out.append((cid + " tree", None))
    if spec.matching is not None:
        covered = [w for e in spec.matching for w in e]
        if sorted(covered) != list(range(G.p)):
            out.append((cid + " perfect-matching", spec.matching))
        for u, v in spec.matching:
            if not G.has_edge(u, v):
                out.append((cid + " perfect-matching", (u, v)))
            elif vals[u] + vals[v] != total:
                out.append((cid, (u, v, vals[u] + vals[v])))
        return spec.matching
    M = _find_matching(G, vals, total)
    if M is None:
        out.append((cid, f"no perfect matching with pair sums {total}"))
    return M


def _tree_harmonious_labels(G: Graph, vals, q: int, hi: int, modulus: int, out: list) -> None:
    """Tree exception: labels in [0, hi], residues mod `modulus` repeat at most once."""
    if not G.is_tree():
        out.append(("tree-exception tree", None))
    _in_range(vals, 0, hi, out, "vertex-range")
    res = [c % modulus for c in vals]
    if len(res) - len(set(res)) > 1:
        out.append(("tree-exception repeat", sorted(res)))


def _edges_of(G: Graph, f: Labeling, spec: VerifierSpec, rule: EdgeRule, out: list) -> list[int]:
    """Induced edge colors; explicit edge colors, when present, must agree with them."""
    ec = induced_colors(G, f, rule)
    if f.edge is not None and list(f.edge) != ec:
        i = next(i for i, (a, b) in enumerate(zip(f.edge, ec)) if a != b)
        out.append(("edge-rule", (i, f.edge[i], ec[i])))
    return ec


def _bijection(G: Graph, f: Labeling, out: list) -> None:
    allv = list(f.vertex) + list(f.edge)
    _same_multiset(allv, range(1, G.p + G.q + 1), out, "bijection [1,p+q]")


def verify(G: Graph, f: Labeling, spec: VerifierSpec) -> VerifyReport:
    f.check_shape(G)
    if spec.total and f.edge is None:
        raise LabelingError(f"{spec.kind} needs explicit edge colors")
    kind = spec.kind
    p, q = G.p, G.q
    V = f.vertex
    out: list = []
    const = None
    info: dict = {}

    if kind in ("graceful", "set-ordered-graceful", "strongly-graceful"):
        ec = _edges_of(G, f, spec, ABS_DIFF, out)
        _injective(V, out, "B-1 injective")
        _in_range(V, 0, q, out, "B-2 range [0,q]")
        if V and min(V) != 0:
            out.append(("B-2 min 0", min(V)))
        _same_multiset(ec, range(1, q + 1), out, "B-4 edges [1,q]")
        if kind == "set-ordered-graceful":
            _set_ordered(G, V, out)
        if kind == "strongly-graceful":
            info["matching"] = _strong(G, V, q, spec, out, "B-7")

    elif kind in ("odd-graceful", "set-ordered-odd-graceful", "strongly-odd-graceful"):
        ec = _edges_of(G, f, spec, ABS_DIFF, out)
        _injective(V, out, "B-1 injective")
        _in_range(V, 0, 2 * q - 1, out, "B-3 range [0,2q-1]")
        if V and min(V) != 0:
            out.append(("B-3 min 0", min(V)))
        _same_multiset(ec, odd_set(2 * q - 1), out, "B-5 edges [1,2q-1]^o")
        if kind == "set-ordered-odd-graceful":
            _set_ordered(G, V, out)
        if kind == "strongly-odd-graceful":
            info["matching"] = _strong(G, V, 2 * q - 1, spec, out, "B-8")

    elif kind == "k-graceful":
        k = spec.k
        ec = _edges_of(G, f, spec, ABS_DIFF, out)
        _injective(V, out)
        _in_range(V, 0, q + k - 1, out, "range [0,q+k-1]")
        _same_multiset(ec, range(k, q + k), out, "edges [k,q+k-1]")

    elif kind in ("kd-graceful", "kd-arithmetic"):
        k, d = spec.k, spec.d
        rule = ABS_DIFF if kind == "kd-graceful" else EdgeRule("sum")
        ec = _edges_of(G, f, spec, rule, out)
        _injective(V, out)
        _in_range(V, 0, k + (q - 1) * d, out, "range [0,k+(q-1)d]")
        _same_multiset(ec, progression(k, d, q), out, "edges S(k,d)")

    elif kind == "kd-harmonious":
        k, d = spec.k, spec.d
        ec = _edges_of(G, f, spec, EdgeRule("sum-plus-mod*", m=q * d, k=k), out)
        if spec.tree_exception:
            # trees may use one extra step of range, labels stay distinct
            if not G.is_tree():
                out.append(("tree-exception tree", None))
            _injective(V, out)
            _in_range(V, 0, k + q * d, out, "range [0,k+qd]")
        else:
            _injective(V, out)
            _in_range(V, 0, k + (q - 1) * d, out, "range [0,k+(q-1)d]")
        _same_multiset(ec, progression(k, d, q), out, "edges S(k,d)")

    elif kind == "felicitous":
        ec = _edges_of(G, f, spec, EdgeRule("sum-mod", m=max(q, 1)), out)
        _injective(V, out)
        _in_range(V, 0, q, out, "range [0,q]")
        _injective(ec, out, "edge colors distinct")

    elif kind == "harmonious":
        ec = _edges_of(G, f, spec, EdgeRule("sum-mod", m=max(q, 1)), out)
        if spec.tree_exception:
            _tree_harmonious_labels(G, V, q, q, max(q, 1), out)
        else:
            _injective(V, out)
            _in_range(V, 0, q - 1, out, "C-1 range [0,q-1]")
        _same_multiset(ec, range(q), out, "C-3 edges [0,q-1]")

    elif kind == "odd-elegant":
        ec = _edges_of(G, f, spec, EdgeRule("sum-mod", m=2 * q), out)
        _injective(V, out)
        _in_range(V, 0, 2 * q - 1, out, "range [0,2q-1]")
        _same_multiset(ec, odd_set(2 * q - 1), out, "edges [1,2q-1]^o")

    elif kind in ("gcd-graceful", "gcd-odd-graceful"):
        ec = _edges_of(G, f, spec, EdgeRule("gcd"), out)
        if spec.injective:
            _injective(V, out)
        _in_range(V, 1, spec.k if spec.k is not None else max(V, default=1), out, "range [1,M]")
        want = range(1, q + 1) if kind == "gcd-graceful" else odd_set(2 * q - 1)
        _same_multiset(ec, want, out, "gcd edges")

    elif kind == "custom":
        ec = _edges_of(G, f, spec, spec.rule or ABS_DIFF, out)
        if spec.injective:
            _injective(V, out)
        _same_multiset(ec, spec.target, out, "target edge set")

    elif kind == "even-harmonious":
        ec = _edges_of(G, f, spec, EdgeRule("sum-mod", m=2 * q), out)
        _injective(V, out)
        _in_range(V, 0, 2 * q, out, "C-5 range [0,2q]")
        _same_multiset(ec, range(0, 2 * q - 1, 2), out, "C-9 edges [0,2q-2]^e")

    elif kind == "odd-harmonious":
        ec = _edges_of(G, f, spec, EdgeRule("sum-mod", m=2 * q), out)
        _injective(V, out)
        _in_range(V, 0, 2 * q - 1, out, "C-6 range [0,2q-1]")
        _same_multiset(ec, odd_set(2 * q - 1), out, "C-10 edges [1,2q-1]^o")

    elif kind == "strongly-odd-harmonious":
        ec = _edges_of(G, f, spec, EdgeRule("sum-mod", m=2 * q), out)
        _injective(V, out)
        _in_range(V, 0, q, out, "C-2 range [0,q]")
        _same_multiset(ec, odd_set(2 * q - 1), out, "C-10 edges [1,2q-1]^o")

    elif kind == "k-even-sequential":
        k = spec.k
        ec = _edges_of(G, f, spec, EdgeRule("sum-eps-mod*", m=2 * q * k, k=2 * k), out)
        _injective(V, out)
        _in_range(V, k - 1, k + 2 * q - 1, out, "C-5 range [k-1,k+2q-1]")
        _same_multiset(ec, range(2 * k, 2 * k + 2 * q - 1, 2), out, "C-9 edges [2k,2k+2q-2]^e")

    elif kind == "strongly-c-harmonious":
        ec = _edges_of(G, f, spec, EdgeRule("sum"), out)
        _injective(V, out)
        _in_range(V, 0, q, out, "range [0,q]")
        c = spec.c if spec.c is not None else min(ec, default=0)
        _same_multiset(ec, range(c, c + q), out, "C-4 edges [c,c+q-1]")
        const = c

    # total kinds ----------------------------------------------------------
    elif kind in ("edge-magic-total", "super-edge-magic-total"):
        E = f.edge
        if not spec.coloring:
            _bijection(G, f, out)
        sums = [V[u] + E[i] + V[v] for i, (u, v) in enumerate(G.edges)]
        const = _constant(sums, spec.c, out, "magic f(u)+f(uv)+f(v)=c")
        if kind == "super-edge-magic-total":
            _same_multiset(V, range(1, p + 1), out, "super f(V)=[1,p]")

    elif kind == "odd-even-separable-emt":
        E = f.edge
        sums = [V[u] + E[i] + V[v] for i, (u, v) in enumerate(G.edges)]
        const = _constant(sums, spec.c, out, "magic f(u)+f(uv)+f(v)=c")
        _same_multiset(V, odd_set(2 * p - 1), out, "f(V)=[1,2p-1]^o")
        _same_multiset(E, range(2, 2 * q + 1, 2), out, "f(E)=[2,2q]^e")

    elif kind == "kd-edge-antimagic-total":
        E = f.edge
        _bijection(G, f, out)
        sums = [V[u] + E[i] + V[v] for i, (u, v) in enumerate(G.edges)]
        _same_multiset(sums, progression(spec.k, spec.d, q), out, "edge sums S(k,d)")

    elif kind in ("edge-magic-graceful", "edge-magic-total-graceful", "edge-difference",
                  "graceful-difference", "felicitous-difference"):
        E = f.edge
        fn = {
            "edge-magic-graceful": lambda a, e, b: abs(a + b - e),
            "felicitous-difference": lambda a, e, b: abs(a + b - e),
            "edge-magic-total-graceful": lambda a, e, b: e + abs(a - b),
            "edge-difference": lambda a, e, b: e + abs(a - b),
            "graceful-difference": lambda a, e, b: abs(abs(a - b) - e),
        }[kind]
        if kind in ("edge-magic-graceful", "edge-magic-total-graceful") and not spec.coloring:
            _bijection(G, f, out)
        else:
            _in_range(list(V) + list(E), 1, max(list(V) + list(E), default=1), out, "colors >= 1")
        vals = [fn(V[u], E[i], V[v]) for i, (u, v) in enumerate(G.edges)]
        fixed = spec.k if spec.k is not None else spec.c
        const = _constant(vals, fixed, out, f"{kind} constant")

    elif kind == "k-lambda-magic":
        E = f.edge
        _bijection(G, f, out)
        lam = spec.lam
        vals = [V[u] + V[v] - lam * E[i] for i, (u, v) in enumerate(G.edges)]
        const = _constant(vals, spec.k, out, "f(u)+f(v)=k+lambda f(uv)")

    elif kind == "total-graceful":
        E = f.edge
        _injective(V, out, "(a) |f(V)|=p")
        _injective(E, out, "(a) |f(E)|=q")
        for i, (u, v) in enumerate(G.edges):
            if E[i] != abs(V[u] - V[v]):
                out.append(("(a) f(uv)=|f(u)-f(v)|", (i, E[i])))
                break
        if set(V) | set(E) != set(range(1, p + q + 1)):
            out.append(("(b) f(V)+f(E)=[1,p+q]", sorted(set(V) | set(E))))

    elif kind == "kd-graceful-total":
        k, d = spec.k, spec.d
        E = f.edge
        for i, (u, v) in enumerate(G.edges):
            if E[i] != abs(V[u] - V[v]):
                out.append(("Ptol-1 f(uv)=|f(u)-f(v)|", (i, E[i])))
                break
        _same_multiset(E, progression(k, d, q), out, "Ptol-1 edges S(k,d)")
        B = bipartition(G)
        if B is None:
            out.append(("bipartite", None))
        else:
            def ok(X, Y):
                return (all(V[x] >= 0 and V[x] % d == 0 for x in X)
                        and all(V[y] >= k and (V[y] - k) % d == 0 for y in Y))
            if not (ok(B.X, B.Y) or ok(B.Y, B.X)):
                out.append(("Ptol-1 side colors", None))
        _in_range(E, k, k + (q - 1) * d, out, "Ptol-1 edge range")

    else:  # pragma: no cover - guarded by VerifierSpec
        raise LabelingError(kind)

    return VerifyReport(tuple(out), const, info)


# ---------------------------------------------------------------------------
# composite verifiers

@dataclass(frozen=True)
class MagicProfile:
    sum: Optional[int]
    edge_difference: Optional[int]
    felicitous_difference: Optional[int]
    graceful_difference: Optional[int]

    def to_json(self) -> dict:
        return {
            "sum": self.sum, "edge-difference": self.edge_difference,
            "felicitous-difference": self.felicitous_difference,
            "graceful-difference": self.graceful_difference,
        }


MAGIC_FUNCTIONS: dict[str, Callable[[int, int, int], int]] = {
    "sum": lambda a, e, b: a + e + b,
    "edge_difference": lambda a, e, b: e + abs(a - b),
    "felicitous_difference": lambda a, e, b: abs(a + b - e),
    "graceful_difference": lambda a, e, b: abs(abs(a - b) - e),
}


def magic_constants(triples: Iterable[tuple[int, int, int]]) -> dict[str, Optional[int]]:
    """For (end, edge, end) triples: the constant of each edge function, or None."""
    triples = list(triples)
    res = {}
    for name, fn in MAGIC_FUNCTIONS.items():
        vals = {fn(a, e, b) for a, e, b in triples}
        res[name] = vals.pop() if len(vals) == 1 else None
    return res


def magic_profile(G: Graph, f: Labeling) -> MagicProfile:
    f.check_shape(G)
    if f.edge is None:
        raise LabelingError("magic_profile needs a total labeling")
    triples = [(f.vertex[u], f.edge[i], f.vertex[v]) for i, (u, v) in enumerate(G.edges)]
    return MagicProfile(**magic_constants(triples))


def _perfect_assignment(left: Sequence, right: Sequence, ok: Callable) -> Optional[dict]:
    """Kuhn's augmenting-path matching; returns left->right covering all of `left` or None."""
    match_r: dict = {}

    def augment(i, seen):
        for j in range(len(right)):
            if j in seen or not ok(left[i], right[j]):
                continue
            seen.add(j)
            if j not in match_r or augment(match_r[j], seen):
                match_r[j] = i
                return True
        return False

    for i in range(len(left)):
        if not augment(i, set()):
            return None
    return {left[i]: right[j] for j, i in match_r.items()}


def verify_6C(G: Graph, f: Labeling) -> VerifyReport:
    f.check_shape(G)
    if f.edge is None:
        raise LabelingError("6C needs a total labeling")
    p, q = G.p, G.q
    V, E = f.vertex, f.edge
    if sorted(V + E) != list(range(1, p + q + 1)):
        raise LabelingError("6C labeling must be a bijection onto [1,p+q]")
    B = bipartition(G)
    if B is None:
        raise LabelingError("6C needs a bipartite graph")
    out: list = []
    flags = {}
    consts = {}
    idx = list(range(q))
    diff = [abs(V[u] - V[v]) for u, v in G.edges]
    n2 = 2 * (p + q)

    # (i) e-magic
    vals = [E[i] + diff[i] for i in idx]
    flags["i"] = len(set(vals)) <= 1
    consts["k"] = vals[0] if vals else None

    # (ii) ee-difference: every edge matched with another edge
    m = _perfect_assignment(idx, idx, lambda a, b: a != b and (E[a] == diff[b] or E[a] == n2 - diff[b]))
    flags["ii"] = m is not None

    # (iii) ee-balanced
    s = [diff[i] - E[i] for i in idx]
    flags["iii"] = False
    cands = sorted({s[a] + s[b] + extra for a in idx for b in idx if a != b for extra in (0, n2)})
    for kk in cands:
        ok = lambda a, b, kk=kk: a != b and (s[a] + s[b] == kk or n2 + s[a] + s[b] == kk)
        if _perfect_assignment(idx, idx, ok) is not None:
            flags["iii"], consts["k'"] = True, kk
            break

    # (iv) EV-ordered
    sv, se = set(V), set(E)
    flags["iv"] = bool(
        (V and E and (min(V) > max(E) or max(V) < min(E)))
        or sv <= se or se <= sv
        or (all(c % 2 for c in V) and all(c % 2 == 0 for c in E))
    )

    # (v) ve-matching with at most one singular vertex
    a0 = (p + q + 1) // 2
    flags["v"] = False
    verts = list(range(p))
    for kk in sorted({E[i] + V[w] for i in idx for w in verts}):
        singles = [None] + [w for w in verts if V[w] == a0]
        for sgl in singles:
            rest = [w for w in verts if w != sgl]
            if len(rest) != q:
                continue
            if _perfect_assignment(idx, rest, lambda i, w, kk=kk: E[i] + V[w] == kk) is not None:
                flags["v"], consts["k''"] = True, kk
                break
        if flags["v"]:
            break

    # (vi) set-ordered
    so: list = []
    _set_ordered(G, V, so)
    flags["vi"] = not so

    for name, okf in flags.items():
        if not okf:
            out.append((f"6C-{name}", None))
    return VerifyReport(tuple(out), consts.get("k"), {"flags": flags, "constants": consts})


def verify_twin_pair(G1: Graph, f1: Labeling, G2: Graph, f2: Labeling, kind: str) -> VerifyReport:
    if G1.q != G2.q:
        raise LabelingError("twin graphs must have the same edge count")
    f1.check_shape(G1)
    f2.check_shape(G2)
    q = G1.q
    out: list = []
    if kind == "twin-odd-graceful":
        r1 = verify(G1, f1, VerifierSpec("odd-graceful"))
        out += [("G1 " + c, w) for c, w in r1.failures]
        _injective(f2.vertex, out, "G2 injective")
        _same_multiset(induced_colors(G2, f2), odd_set(2 * q - 1), out, "G2 edges [1,2q-1]^o")
        _in_range(list(f1.vertex) + list(f2.vertex), 0, 2 * q - 1, out, "union in [0,2q-1]")
    elif kind == "twin-odd-elegant":
        for tag, G, f in (("G1", G1, f1), ("G2", G2, f2)):
            r = verify(G, f, VerifierSpec("odd-elegant"))
            out += [(f"{tag} {c}", w) for c, w in r.failures]
        _in_range(list(f1.vertex) + list(f2.vertex), 0, q - 1, out, "union in [0,q-1]")
    else:
        raise LabelingError(f"unknown twin kind {kind!r}")
    overlap = len(set(f1.vertex) & set(f2.vertex))
    return VerifyReport(tuple(out), None, {"overlap": overlap})


def verify_flawed(parts: Sequence[Graph], Estar: Iterable[tuple[int, int]], spec: VerifierSpec,
                  f: Labeling) -> VerifyReport:
    """Verify `spec` on the union of `parts` plus E*; edges of E* follow the union's edges."""
    G, offsets = disjoint_union(parts)
    H = add_edges(G, Estar)
    if not H.is_connected():
        raise GraphError("union plus E* is disconnected")
    rep = verify(H, f, spec)
    info = dict(rep.info)
    info["offsets"] = offsets
    info["estar"] = H.edges[G.q:]
    return replace(rep, info=info)
