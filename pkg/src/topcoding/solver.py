"""Backtracking search for labelings, plus degree-sequence realization.

Vertices are labeled in index order with labels tried in ascending order.
For total kinds each edge is colored as soon as both of its ends are.
Every candidate that survives pruning is re-checked with `verify`, so the
stream is exactly the set of labelings the verifier accepts.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .degseq import havel_hakimi
from .graph import Graph
from .labelings import EdgeRule, Labeling, VerifierSpec, odd_set, progression, verify

DEFAULT_MAX_NODES = 10 ** 9


class SearchTooLarge(RuntimeError):
    def __init__(self, estimate: int, cap: int):
        super().__init__(f"search space estimate {estimate} exceeds cap {cap}")
        self.estimate = estimate
        self.cap = cap


def max_nodes() -> int:
    env = os.environ.get("TOPSNUT_MAX_NODES")
    return int(env) if env else DEFAULT_MAX_NODES


@dataclass
class _Plan:
    vdom: range
    vinj: bool = True
    bij: bool = False
    rule: Optional[EdgeRule] = None           # induced edge color
    edom: Optional[range] = None               # free edge colors for total kinds
    forced: Optional[Callable] = None          # (a, b) -> edge color for total kinds
    key: Optional[Callable] = None             # (a, e, b) -> value checked per edge
    target: Optional[Counter] = None           # allowed multiset of key values
    const: Optional[int] = None                # fixed constant for key values
    constant_key: bool = False                 # all key values must agree
    distinct: bool = False                     # key values pairwise distinct
    dual_pair: bool = False                    # symmetry breaking applies


def _plan(G: Graph, spec: VerifierSpec) -> _Plan:
    p, q = G.p, G.q
    k, d = spec.k, spec.d
    kind = spec.kind
    abs_key = lambda a, e, b: e
    if kind in ("graceful", "set-ordered-graceful", "strongly-graceful"):
        return _Plan(range(0, q + 1), rule=EdgeRule("abs-diff"), key=abs_key,
                     target=Counter(range(1, q + 1)), dual_pair=True)
    if kind in ("odd-graceful", "set-ordered-odd-graceful", "strongly-odd-graceful"):
        return _Plan(range(0, 2 * q), rule=EdgeRule("abs-diff"), key=abs_key,
                     target=Counter(odd_set(2 * q - 1)), dual_pair=True)
    if kind == "k-graceful":
        return _Plan(range(0, q + k), rule=EdgeRule("abs-diff"), key=abs_key,
                     target=Counter(range(k, q + k)), dual_pair=True)
    if kind == "kd-graceful":
        return _Plan(range(0, k + (q - 1) * d + 1), rule=EdgeRule("abs-diff"), key=abs_key,
                     target=Counter(progression(k, d, q)), dual_pair=True)
    if kind == "kd-arithmetic":
        return _Plan(range(0, k + (q - 1) * d + 1), rule=EdgeRule("sum"), key=abs_key,
                     target=Counter(progression(k, d, q)))
    if kind == "kd-harmonious":
        hi = k + (q * d if spec.tree_exception else (q - 1) * d)
        return _Plan(range(0, hi + 1),
                     rule=EdgeRule("sum-plus-mod*", m=q * d, k=k), key=abs_key,
                     target=Counter(progression(k, d, q)))
    if kind == "felicitous":
        return _Plan(range(0, q + 1), rule=EdgeRule("sum-mod", m=max(q, 1)), key=abs_key, distinct=True)
    if kind == "harmonious":
        hi = q if spec.tree_exception else q - 1
        return _Plan(range(0, hi + 1), vinj=not spec.tree_exception,
                     rule=EdgeRule("sum-mod", m=max(q, 1)), key=abs_key, target=Counter(range(q)))
    if kind == "odd-elegant":
        return _Plan(range(0, 2 * q), rule=EdgeRule("sum-mod", m=2 * q), key=abs_key,
                     target=Counter(odd_set(2 * q - 1)))
    if kind == "even-harmonious":
        return _Plan(range(0, 2 * q + 1), rule=EdgeRule("sum-mod", m=2 * q), key=abs_key,
                     target=Counter(range(0, 2 * q - 1, 2)))
    if kind == "odd-harmonious":
        return _Plan(range(0, 2 * q), rule=EdgeRule("sum-mod", m=2 * q), key=abs_key,
                     target=Counter(odd_set(2 * q - 1)))
    if kind == "strongly-odd-harmonious":
        return _Plan(range(0, q + 1), rule=EdgeRule("sum-mod", m=2 * q), key=abs_key,
                     target=Counter(odd_set(2 * q - 1)))
    if kind == "k-even-sequential":
        return _Plan(range(k - 1, k + 2 * q), rule=EdgeRule("sum-eps-mod*", m=2 * q * k, k=2 * k),
                     key=abs_key, target=Counter(range(2 * k, 2 * k + 2 * q - 1, 2)))
    if kind == "strongly-c-harmonious":
        return _Plan(range(0, q + 1), rule=EdgeRule("sum"), key=abs_key, distinct=True)
    if kind in ("gcd-graceful", "gcd-odd-graceful"):
        M = k if k is not None else 2 * max(2 * q - 1, 1)
        want = range(1, q + 1) if kind == "gcd-graceful" else odd_set(2 * q - 1)
        return _Plan(range(1, M + 1), vinj=spec.injective, rule=EdgeRule("gcd"), key=abs_key,
                     target=Counter(want))
    if kind == "custom":
        hi = k if k is not None else max(spec.target, default=0)
        return _Plan(range(0, hi + 1), vinj=spec.injective, rule=spec.rule or EdgeRule("abs-diff"),
                     key=abs_key, target=Counter(spec.target))

    full = range(1, p + q + 1)
    if kind in ("edge-magic-total", "super-edge-magic-total"):
        vdom = range(1, p + 1) if kind == "super-edge-magic-total" else full
        return _Plan(vdom, vinj=not spec.coloring, bij=not spec.coloring, edom=full,
                     key=lambda a, e, b: a + e + b, const=spec.c, constant_key=True)
    if kind == "kd-edge-antimagic-total":
        return _Plan(full, bij=True, edom=full, key=lambda a, e, b: a + e + b,
                     target=Counter(progression(k, d, q)))
    if kind in ("edge-magic-graceful", "edge-magic-total-graceful"):
        fn = (lambda a, e, b: abs(a + b - e)) if kind == "edge-magic-graceful" else (lambda a, e, b: e + abs(a - b))
        return _Plan(full, bij=not spec.coloring, vinj=not spec.coloring, edom=full, key=fn,
                     const=spec.k if spec.k is not None else spec.c, constant_key=True)
    if kind == "k-lambda-magic":
        lam = spec.lam
        return _Plan(full, bij=True, edom=full, key=lambda a, e, b: a + b - lam * e,
                     const=spec.k, constant_key=True)
    if kind == "total-graceful":
        return _Plan(full, bij=True, forced=lambda a, b: abs(a - b), key=abs_key, distinct=True)
    if kind in ("edge-difference", "graceful-difference", "felicitous-difference"):
        fn = {
            "edge-difference": lambda a, e, b: e + abs(a - b),
            "graceful-difference": lambda a, e, b: abs(abs(a - b) - e),
            "felicitous-difference": lambda a, e, b: abs(a + b - e),
        }[kind]
        return _Plan(full, vinj=False, edom=full, key=fn,
                     const=spec.k if spec.k is not None else spec.c, constant_key=True)
    if kind == "kd-graceful-total":
        return _Plan(range(0, k + (q - 1) * d + 1), vinj=False, forced=lambda a, b: abs(a - b),
                     key=abs_key, target=Counter(progression(k, d, q)))
    raise ValueError(f"no search plan for {kind}")


def estimate(G: Graph, spec: VerifierSpec) -> int:
    """|universe|^p, times |universe| for the first free edge of a constant-detecting total kind."""
    plan = _plan(G, spec)
    n = len(plan.vdom) ** G.p
    if plan.edom is not None:
        n *= len(plan.edom) if plan.const is None else 1
    return n


def search(G: Graph, spec: VerifierSpec, limit: Optional[int] = None,
           symmetry_break: bool = False, cap: Optional[int] = None) -> Iterator[Labeling]:
    """Yield every labeling of G passing `spec`, in fixed depth-first order."""
    cap = max_nodes() if cap is None else cap
    est = estimate(G, spec)
    if est > cap:
        raise SearchTooLarge(est, cap)
    return _search(G, spec, limit, symmetry_break)


def _search(G: Graph, spec: VerifierSpec, limit, symmetry_break) -> Iterator[Labeling]:
    plan = _plan(G, spec)
    p, q = G.p, G.q
    total = spec.total
    # edges become colorable once their later endpoint is labeled
    ready = [[] for _ in range(p)]
    for i, (u, v) in enumerate(G.edges):
        ready[max(u, v)].append(i)
    lo, hi = plan.vdom.start, plan.vdom.stop - 1
    sym = symmetry_break and plan.dual_pair

    vert = [None] * p
    edge = [None] * q
    used = Counter()
    keys = Counter()
    state = {"const": plan.const, "extreme": False}
    emitted = 0

    def key_ok(val) -> bool:
        if plan.target is not None:
            return keys[val] < plan.target[val]
        if plan.distinct:
            return keys[val] == 0
        if plan.constant_key:
            return state["const"] is None or state["const"] == val
        return True

    def edge_options(i):
        u, v = G.edges[i]
        a, b = vert[u], vert[v]
        if not total:
            e = plan.rule(a, b)
            return [(e, plan.key(a, e, b))]
        if plan.forced is not None:
            e = plan.forced(a, b)
            return [(e, plan.key(a, e, b))]
        return [(e, plan.key(a, e, b)) for e in plan.edom]

    def color_edges(v, j):
        """Color the edges in ready[v] from position j; yields after each complete assignment."""
        if j == len(ready[v]):
            yield
            return
        i = ready[v][j]
        for e, kv in edge_options(i):
            if not key_ok(kv):
                continue
            if total and plan.bij and used[e]:
                continue
            set_const = plan.constant_key and state["const"] is None
            if set_const:
                state["const"] = kv
            edge[i] = e
            keys[kv] += 1
            if total and plan.bij:
                used[e] += 1
            yield from color_edges(v, j + 1)
            if total and plan.bij:
                used[e] -= 1
            keys[kv] -= 1
            edge[i] = None
            if set_const:
                state["const"] = None

    def place(v):
        nonlocal emitted
        if v == p:
            f = Labeling(tuple(vert), tuple(edge) if total else None)
            if verify(G, f, spec).passed:
                emitted += 1
                yield f
            return
        for a in plan.vdom:
            if (plan.vinj or plan.bij) and used[a]:
                continue
            first_extreme = sym and not state["extreme"] and a in (lo, hi)
            if first_extreme and a - lo > (hi - lo) / 2:
                continue
            vert[v] = a
            used[a] += 1
            if first_extreme:
                state["extreme"] = True
            for _ in color_edges(v, 0):
                yield from place(v + 1)
                if limit is not None and emitted >= limit:
                    break
            if first_extreme:
                state["extreme"] = False
            used[a] -= 1
            vert[v] = None
            if limit is not None and emitted >= limit:
                return

    yield from place(0)


def exists_labeling(G: Graph, spec: VerifierSpec, **kw) -> bool:
    return next(search(G, spec, limit=1, **kw), None) is not None


def find_labeling(G: Graph, spec: VerifierSpec, **kw) -> Optional[Labeling]:
    return next(search(G, spec, limit=1, **kw), None)


def count_labelings(G: Graph, spec: VerifierSpec, symmetry_break: bool = False, **kw) -> int:
    return sum(1 for _ in search(G, spec, symmetry_break=symmetry_break, **kw))


def realize(d) -> Optional[Graph]:
    """Havel-Hakimi realization; vertex i carries the i-th largest entry."""
    from .degseq import DegreeSequence

    d = DegreeSequence(d)
    edges = havel_hakimi(d)
    if edges is None:
        return None
    return Graph(len(d), tuple(edges))
