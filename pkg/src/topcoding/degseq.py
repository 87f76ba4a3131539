"""Degree-sequence algebra: graphicality and the component operations."""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

import numpy as np


class DegreeSequenceError(ValueError):
    pass


class DegreeSequence(tuple):
    """Non-increasing tuple of non-negative integers.  Input order is normalised away."""

    def __new__(cls, entries: Iterable[int] = ()):
        vals = [int(a) for a in entries]
        if any(a < 0 for a in vals):
            raise DegreeSequenceError("degree entries must be non-negative")
        return super().__new__(cls, sorted(vals, reverse=True))

    def __repr__(self):
        return f"DegreeSequence({tuple(self)})"

    @property
    def n(self) -> int:
        return len(self)

    @classmethod
    def parse(cls, text: str) -> "DegreeSequence":
        text = text.strip().strip("()[]")
        if not text:
            return cls()
        try:
            return cls(int(t) for t in text.replace(" ", "").split(","))
        except ValueError:
            raise DegreeSequenceError(f"bad sequence {text!r}") from None


def is_graphical(d: Iterable[int]) -> bool:
    """Erdos-Gallai: even sum and sum_{i<=k} a_i <= k(k-1) + sum_{j>k} min(k, a_j) for all k."""
    a = np.array(DegreeSequence(d), dtype=np.int64)
    n = len(a)
    if n == 0:
        return True
    if a.sum() % 2 or a[0] > n - 1:
        return False
    left = np.cumsum(a)
    for k in range(1, n + 1):
        right = k * (k - 1) + np.minimum(a[k:], k).sum()
        if left[k - 1] > right:
            return False
    return True


def havel_hakimi(d: Iterable[int]) -> list[tuple[int, int]] | None:
    """Edges of a simple realisation, or None.

    Vertex i carries the i-th entry of the sorted sequence.  At each step the
    vertex of largest residual degree (lowest index on ties) is joined to the
    next largest ones (lowest index on ties).
    """
    d = DegreeSequence(d)
    res = list(d)
    edges = []
    while True:
        order = sorted(range(len(res)), key=lambda i: (-res[i], i))
        if not order or res[order[0]] == 0:
            return edges
        v = order[0]
        k = res[v]
        targets = order[1:k + 1]
        if len(targets) < k or any(res[t] == 0 for t in targets):
            return None
        res[v] = 0
        for t in targets:
            res[t] -= 1
            edges.append((min(v, t), max(v, t)))


def increase_component(d: Sequence[int], k: int, bumped: Iterable[int]) -> DegreeSequence:
    """d (+) (k): bump the given k positions of d by one and append a new entry k."""
    d = DegreeSequence(d)
    bumped = list(bumped)
    if k > len(d):
        raise DegreeSequenceError(f"k={k} exceeds length {len(d)}")
    if len(bumped) != k or len(set(bumped)) != k:
        raise DegreeSequenceError("bumped must list k distinct positions")
    if any(not 0 <= i < len(d) for i in bumped):
        raise DegreeSequenceError("bumped position out of range")
    out = list(d)
    for i in bumped:
        out[i] += 1
    return DegreeSequence(out + [k])


def bump_choices(d: Sequence[int], k: int) -> Iterator[tuple[int, ...]]:
    """All k-subsets of positions of d; the caller picks one for increase_component."""
    return itertools.combinations(range(len(d)), k)


def decrease_component(d: Sequence[int], position: int, reduced: Iterable[int] | None = None):
    """Inverse of increase_component: drop entry at `position`, subtract one from `reduced`.

    Positions in `reduced` index the remainder after the removal.  When omitted
    the largest remaining entries are chosen.  Returns (sequence, reduced positions).
    """
    d = DegreeSequence(d)
    if not 0 <= position < len(d):
        raise DegreeSequenceError("position out of range")
    a = d[position]
    rest = list(d[:position]) + list(d[position + 1:])
    if reduced is None:
        reduced = list(range(a))
    reduced = list(reduced)
    if len(reduced) != a or len(set(reduced)) != a:
        raise DegreeSequenceError(f"need {a} distinct positions to reduce")
    for i in reduced:
        if not 0 <= i < len(rest) or rest[i] == 0:
            raise DegreeSequenceError("no valid subtraction subset")
        rest[i] -= 1
    return DegreeSequence(rest), tuple(reduced)


def coincide(d1: Sequence[int], d2: Sequence[int], pairs: Sequence[tuple[int, int]]) -> DegreeSequence:
    """d1 (.)_s d2: sum the paired entries, carry the rest; length len1+len2-s."""
    d1, d2 = DegreeSequence(d1), DegreeSequence(d2)
    if not 1 <= len(pairs) <= min(len(d1), len(d2)):
        raise DegreeSequenceError("need 1 <= s <= min(len d1, len d2) pairs")
    left = [i for i, _ in pairs]
    right = [j for _, j in pairs]
    if len(set(left)) != len(left) or len(set(right)) != len(right):
        raise DegreeSequenceError("pair indices reused")
    if any(not 0 <= i < len(d1) for i in left) or any(not 0 <= j < len(d2) for j in right):
        raise DegreeSequenceError("pair index out of range")
    merged = [d1[i] + d2[j] for i, j in pairs]
    rest = [a for i, a in enumerate(d1) if i not in left] + [c for j, c in enumerate(d2) if j not in right]
    return DegreeSequence(merged + rest)


def join(d1: Sequence[int], d2: Sequence[int], i: int, j: int) -> DegreeSequence:
    """Degree-joining: entry i of d1 and entry j of d2 each gain one, then concatenate."""
    d1, d2 = list(DegreeSequence(d1)), list(DegreeSequence(d2))
    if not (0 <= i < len(d1) and 0 <= j < len(d2)):
        raise DegreeSequenceError("join index out of range")
    d1[i] += 1
    d2[j] += 1
    return DegreeSequence(d1 + d2)


def complement(d: Sequence[int], n: int | None = None) -> DegreeSequence:
    d = DegreeSequence(d)
    if n is None:
        n = len(d)
    if n != len(d):
        raise DegreeSequenceError("n must equal the length of d")
    if d and d[0] > n - 1:
        raise DegreeSequenceError(f"entry {d[0]} exceeds n-1={n - 1}")
    return DegreeSequence(n - 1 - a for a in d)


def union(d1: Sequence[int], d2: Sequence[int]) -> DegreeSequence:
    return DegreeSequence(list(d1) + list(d2))
