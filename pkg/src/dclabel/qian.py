"""Degree-completeness of labeled graphs via forbidden edge pairs.

Draw the vertices on a line in label order. Two vertex-disjoint edges
``{a, b}`` and ``{c, d}`` with ``a < c`` form

* ``H1`` when they cross:  ``a < c < b < d``,
* ``H2`` when they nest:   ``a < c < d < b``.

A labeled graph is degree complete exactly when neither pattern occurs.
Equivalently: for every edge ``(a, b)``, each edge starting strictly inside
``(a, b)`` must end at ``b``. The fast path checks that with range min/max
queries; ``find_forbidden_configuration_scan`` is the plain pairwise scan it is
validated against.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graph import Edge, Graph


@dataclass(frozen=True, order=True)
class LabeledWitness:
    labels: tuple[int, int, int, int]
    kind: str
    edges: tuple[Edge, Edge]

    def __str__(self):
        return f"{self.kind} " + " ".join(map(str, self.labels))


def _witness(a: int, b: int, c: int, d: int) -> LabeledWitness:
    # outer edge (a, b), inner edge (c, d), a < c < b, d != b
    if d > b:
        return LabeledWitness((a, c, b, d), "H1", ((a, b), (c, d)))
    return LabeledWitness((a, c, d, b), "H2", ((a, b), (c, d)))


def find_forbidden_configuration_scan(g: Graph) -> LabeledWitness | None:
    """Quadratic reference: examine every pair of vertex-disjoint edges."""
    best = None
    for (a, b), (c, d) in combinations(g.edges, 2):
        if c < a:
            a, b, c, d = c, d, a, b
        if a == c or c >= b or d == b:
            continue
        w = _witness(a, b, c, d)
        if best is None or w < best:
            best = w
    return best


def _sparse_table(values: np.ndarray, op) -> list[np.ndarray]:
    """``table[k][i] = op`` over ``values[i : i + 2**k]``."""
    table = [values]
    step = 1
    while 2 * step <= len(values):
        prev = table[-1]
        table.append(op(prev[:-step], prev[step:]))
        step *= 2
    return table


def _conflicting_edges(g: Graph) -> np.ndarray:
    """Boolean mask over ``g.edges``: edge has some inner edge not ending at its right end."""
    n = g.n
    edges = np.asarray(g.edges, dtype=np.int64).reshape(-1, 2)
    if len(edges) == 0:
        return np.zeros(0, dtype=bool)
    lo, hi = edges[:, 0], edges[:, 1]
    min_right = np.full(n + 2, n + 1, dtype=np.int64)
    max_right = np.zeros(n + 2, dtype=np.int64)
    np.minimum.at(min_right, lo, hi)
    np.maximum.at(max_right, lo, hi)
    mins = _sparse_table(min_right, np.minimum)
    maxs = _sparse_table(max_right, np.maximum)

    conflict = np.zeros(len(edges), dtype=bool)
    inner = hi - lo >= 2
    left = lo[inner] + 1
    right = hi[inner] - 1
    length = right - left + 1
    level = np.floor(np.log2(length)).astype(np.int64)
    # guard against floating-point log2 rounding
    level = np.where((1 << (level + 1)) <= length, level + 1, level)
    level = np.where((1 << level) > length, level - 1, level)
    qmin = np.empty(len(left), dtype=np.int64)
    qmax = np.empty(len(left), dtype=np.int64)
    for k in np.unique(level):
        sel = level == k
        l, r = left[sel], right[sel] - (1 << int(k)) + 1
        qmin[sel] = np.minimum(mins[k][l], mins[k][r])
        qmax[sel] = np.maximum(maxs[k][l], maxs[k][r])
    b = hi[inner]
    conflict[inner] = (qmin < b) | (qmax > b)
    return conflict


def find_forbidden_configuration(g: Graph) -> LabeledWitness | None:
    """Lexicographically smallest forbidden pair by ``(k1, k2, k3, k4)``, or ``None``."""
    conflict = _conflicting_edges(g)
    if not conflict.any():
        return None
    a = min(g.edges[i][0] for i in np.flatnonzero(conflict))
    adj = g.adj
    rights = sorted(x for x in adj[a] if x > a)
    for c in range(a + 1, rights[-1]):
        outs = [d for d in adj[c] if d > c]
        cands = [_witness(a, b, c, d) for b in rights if b > c for d in outs if d != b]
        if cands:
            return min(cands)
    raise AssertionError("range query reported a conflict that the witness search missed")


def is_degree_complete(g: Graph) -> bool:
    return not _conflicting_edges(g).any()
