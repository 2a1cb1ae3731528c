"""Orientations, out-degree vectors and the brute-force degree-completeness oracle.

A labeled graph is *degree complete* when every integer vector squeezed
between the all-leftward and all-rightward out-degree vectors (prefix-sum
order) and bounded by the vertex degrees is realized by some orientation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import accumulate, product
from typing import Iterator, Sequence

from .errors import EnumerationCapError, GraphInputError
from .graph import Graph

DEFAULT_MAX_VECTORS = 10**6
DEFAULT_MAX_ORIENTATION_EDGES = 20

DegreeVector = tuple[int, ...]


@dataclass(frozen=True)
class Orientation:
    """One arc ``(tail, head)`` per edge, in the graph's canonical edge order."""

    n: int
    arcs: tuple[tuple[int, int], ...]

    def covers(self, g: Graph) -> bool:
        """True if the arcs are exactly the edges of ``g``, each directed once."""
        if self.n != g.n or len(self.arcs) != g.m:
            return False
        return sorted(tuple(sorted(a)) for a in self.arcs) == list(g.edges)


def out_degrees(d: Orientation) -> DegreeVector:
    s = [0] * d.n
    for tail, _ in d.arcs:
        s[tail - 1] += 1
    return tuple(s)


def s_right(g: Graph) -> DegreeVector:
    """Out-degrees when every edge points from the lower label to the higher."""
    s = [0] * g.n
    for u, _ in g.edges:
        s[u - 1] += 1
    return tuple(s)


def s_left(g: Graph) -> DegreeVector:
    """Out-degrees when every edge points from the higher label to the lower."""
    s = [0] * g.n
    for _, v in g.edges:
        s[v - 1] += 1
    return tuple(s)


def cut_count(g: Graph, k: int) -> int:
    """Edges joining ``{1..k}`` to ``{k+1..n}``."""
    if not isinstance(k, int) or not 1 <= k <= g.n:
        raise GraphInputError(f"cut index {k!r} not in 1..{g.n}")
    return sum(1 for u, v in g.edges if u <= k < v)


def _check_vector(s: Sequence[int], n: int) -> DegreeVector:
    s = tuple(s)
    if len(s) != n:
        raise GraphInputError(f"vector has length {len(s)}, expected {n}")
    return s


def dominance_leq(s: Sequence[int], t: Sequence[int]) -> bool:
    """Prefix sums of ``s`` never exceed those of ``t``, and the totals agree."""
    s = tuple(s)
    t = _check_vector(t, len(s))
    ps = pt = 0
    for a, b in zip(s, t):
        ps += a
        pt += b
        if ps > pt:
            return False
    return ps == pt


def satisfies_condition_1(g: Graph, s: Sequence[int]) -> bool:
    s = _check_vector(s, g.n)
    adj = g.adj
    if any(not 0 <= x <= len(adj[i]) for i, x in enumerate(s, start=1)):
        return False
    return dominance_leq(s_left(g), s) and dominance_leq(s, s_right(g))


def enumerate_condition_1_vectors(
    g: Graph, cap: int = DEFAULT_MAX_VECTORS
) -> Iterator[DegreeVector]:
    """Yield every vector satisfying the squeeze condition, lexicographically.

    Raises ``EnumerationCapError`` once more than ``cap`` vectors would be
    produced (after yielding the first ``cap``).
    """
    n = g.n
    deg = [len(g.adj[v]) for v in g.vertices]
    lo = [0, *accumulate(s_left(g))]
    hi = [0, *accumulate(s_right(g))]
    # rest[i] = degree mass still available at positions i..n-1
    rest = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        rest[i] = rest[i + 1] + deg[i]
    m = g.m
    prefix = [0] * n
    emitted = 0

    def extend(i: int, total: int):
        nonlocal emitted
        if i == n:
            if emitted >= cap:
                raise EnumerationCapError("degree vector", cap)
            emitted += 1
            yield tuple(prefix)
            return
        low = max(0, lo[i + 1] - total, m - total - rest[i + 1])
        high = min(deg[i], hi[i + 1] - total)
        for x in range(low, high + 1):
            prefix[i] = x
            yield from extend(i + 1, total + x)

    yield from extend(0, 0)


def realize(g: Graph, s: Sequence[int]) -> Orientation | None:
    """An orientation of ``g`` with out-degree vector ``s``, or ``None``.

    Each edge is assigned a tail among its endpoints, vertex ``i`` accepting at
    most ``s_i`` edges; augmenting paths move already assigned edges to their
    other endpoint. Ties go to the lower-id tail.
    """
    s = _check_vector(s, g.n)
    if any(x < 0 for x in s) or sum(s) != g.m:
        return None
    if any(x > len(g.adj[i]) for i, x in enumerate(s, start=1)):
        return None
    load = [0] * (g.n + 1)
    tail: dict[tuple[int, int], int] = {}
    owned: list[list[tuple[int, int]]] = [[] for _ in range(g.n + 1)]

    for e in g.edges:
        # BFS over vertices; parent[v] = (edge moved onto v, vertex it left)
        parent: dict[int, tuple[tuple[int, int], int] | None] = {}
        queue = deque()
        for v in e:
            parent[v] = None
            queue.append(v)
        found = None
        while queue:
            v = queue.popleft()
            if load[v] < s[v - 1]:
                found = v
                break
            for f in sorted(owned[v]):
                w = f[0] if f[1] == v else f[1]
                if w not in parent:
                    parent[w] = (f, v)
                    queue.append(w)
        if found is None:
            return None
        v = found
        load[v] += 1
        while parent[v] is not None:
            f, prev = parent[v]
            owned[prev].remove(f)
            owned[v].append(f)
            tail[f] = v
            v = prev
        tail[e] = v
        owned[v].append(e)

    arcs = tuple((tail[e], e[1] if tail[e] == e[0] else e[0]) for e in g.edges)
    return Orientation(g.n, arcs)


def enumerate_orientations(
    g: Graph, max_edges: int = DEFAULT_MAX_ORIENTATION_EDGES
) -> Iterator[Orientation]:
    """All ``2**m`` orientations of ``g``."""
    if g.m > max_edges:
        raise EnumerationCapError("orientation", 2**max_edges)
    for flips in product((False, True), repeat=g.m):
        yield Orientation(
            g.n, tuple((v, u) if flip else (u, v) for (u, v), flip in zip(g.edges, flips))
        )


def degree_vectors(g: Graph, max_edges: int = DEFAULT_MAX_ORIENTATION_EDGES) -> set[DegreeVector]:
    """Every out-degree vector produced by some orientation of ``g``."""
    return {out_degrees(d) for d in enumerate_orientations(g, max_edges)}


def is_degree_complete_oracle(
    g: Graph, max_vectors: int = DEFAULT_MAX_VECTORS
) -> tuple[bool, DegreeVector | None]:
    """Check every squeeze-condition vector for realizability.

    Returns ``(True, None)`` or ``(False, first_unrealizable_vector)``.
    """
    for s in enumerate_condition_1_vectors(g, max_vectors):
        if realize(g, s) is None:
            return False, s
    return True, None


def parse_vector(text: str) -> DegreeVector:
    try:
        vec = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise GraphInputError(f"bad degree vector {text!r}") from None
    if any(x < 0 for x in vec):
        raise GraphInputError(f"degree vector has a negative entry: {text!r}")
    return vec


def format_vector(s: Sequence[int]) -> str:
    return ",".join(str(x) for x in s)
