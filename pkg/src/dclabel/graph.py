"""Simple undirected graphs on vertices 1..n, labelings, and text formats.

Edges are stored canonically as ``(u, v)`` with ``u < v`` and kept in
lexicographic order; that order is the edge order every greedy procedure in
this package scans.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable, Sequence

from .errors import GraphInputError

Edge = tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph with vertex ids ``1..n``.

    A labeled graph is just a ``Graph`` read with the convention that vertex
    ids are the labels.
    """

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if not isinstance(n, int) or n < 0:
            raise GraphInputError(f"order must be a nonnegative integer, got {n!r}")
        seen = set()
        for e in edges:
            u, v = e
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphInputError(f"edge {u}-{v} has an endpoint outside 1..{n}")
            if u == v:
                raise GraphInputError(f"loop at vertex {u}")
            ce = canonical_edge(u, v)
            if ce in seen:
                raise GraphInputError(f"duplicate edge {ce[0]}-{ce[1]}")
            seen.add(ce)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        """``adj[v]`` is the neighbor set of ``v``; index 0 is unused."""
        nbrs: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edge_set

    def _check_vertex(self, v) -> None:
        if not isinstance(v, int) or not 1 <= v <= self.n:
            raise GraphInputError(f"vertex {v!r} not in 1..{self.n}")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


LabeledGraph = Graph


def degree(g: Graph, v: int) -> int:
    g._check_vertex(v)
    return len(g.adj[v])


def induced_edge_count(g: Graph, vertices: Iterable[int]) -> int:
    """Number of edges with both endpoints in ``vertices``."""
    vs = set(vertices)
    return sum(1 for u, v in g.edges if u in vs and v in vs)


def remove_vertices(g: Graph, removed: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the surviving vertices, renumbered ``1..n'``.

    Returns the new graph and ``remap`` where ``remap[i]`` is the original id of
    new vertex ``i`` (``remap[0]`` is 0). Renumbering preserves relative order.
    """
    gone = set()
    for x in removed:
        g._check_vertex(x)
        gone.add(x)
    remap = [0] + [v for v in g.vertices if v not in gone]
    new_id = {old: i for i, old in enumerate(remap) if i}
    edges = [(new_id[u], new_id[v]) for u, v in g.edges if u not in gone and v not in gone]
    return Graph(len(remap) - 1, edges), tuple(remap)


def remove_edges(g: Graph, removed: Iterable[Sequence[int]]) -> Graph:
    drop = set()
    for u, v in removed:
        e = canonical_edge(u, v)
        if e not in g.edge_set:
            raise GraphInputError(f"edge {e[0]}-{e[1]} not in graph")
        drop.add(e)
    return Graph(g.n, [e for e in g.edges if e not in drop])


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    adj = g.adj
    seen = [False] * (g.n + 1)
    out = []
    for s in g.vertices:
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comp.sort()
        out.append(comp)
    return out


def is_disjoint_union_of_paths(g: Graph) -> tuple[bool, list[list[int]]]:
    """Decide whether every component of ``g`` is a path.

    On success the second item holds one vertex sequence per component, in
    component order, each starting at the component's lowest-id vertex of
    degree at most one. An isolated vertex is a path of length 0.
    """
    adj = g.adj
    if any(len(adj[v]) > 2 for v in g.vertices):
        return False, []
    paths = []
    for comp in components(g):
        start = next((v for v in comp if len(adj[v]) <= 1), None)
        if start is None:
            # every vertex has degree 2: a cycle
            return False, []
        path = [start]
        prev, cur = 0, start
        while True:
            nxt = [y for y in adj[cur] if y != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            path.append(cur)
        paths.append(path)
    return True, paths


class Labeling:
    """Bijection from vertex ids ``1..n`` onto labels ``1..n``.

    ``labels[v - 1]`` is the label of vertex ``v``.
    """

    __slots__ = ("labels",)

    def __init__(self, labels: Sequence[int]):
        labels = tuple(labels)
        if sorted(labels) != list(range(1, len(labels) + 1)):
            raise GraphInputError("labeling is not a bijection onto 1..n")
        self.labels = labels

    @classmethod
    def from_mapping(cls, mapping: dict[int, int], n: int | None = None) -> Labeling:
        n = len(mapping) if n is None else n
        if set(mapping) != set(range(1, n + 1)):
            raise GraphInputError("labeling must assign every vertex 1..n exactly once")
        return cls(mapping[v] for v in range(1, n + 1))

    @classmethod
    def identity(cls, n: int) -> Labeling:
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.labels)

    def __call__(self, v: int) -> int:
        return self.labels[v - 1]

    def as_dict(self) -> dict[int, int]:
        return {v: f for v, f in enumerate(self.labels, start=1)}

    def inverse(self) -> tuple[int, ...]:
        """Vertex ids in label order."""
        inv = [0] * self.n
        for v, f in enumerate(self.labels, start=1):
            inv[f - 1] = v
        return tuple(inv)

    def apply(self, g: Graph) -> Graph:
        """The labeled graph ``G_f``: vertex ``v`` becomes ``f(v)``."""
        if g.n != self.n:
            raise GraphInputError(f"labeling has {self.n} entries, graph has {g.n} vertices")
        lab = self.labels
        return Graph(g.n, [(lab[u - 1], lab[v - 1]) for u, v in g.edges])

    def __eq__(self, other):
        return isinstance(other, Labeling) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"Labeling({list(self.labels)})"


# --- text formats -----------------------------------------------------------

def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise GraphInputError(f"expected {count} integers, got {line.strip()!r}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphInputError(f"non-integer token in {line.strip()!r}", lineno) from None


def _content_lines(text: str):
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.strip() and not line.lstrip().startswith("#"):
            yield lineno, line


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: a header ``n m`` then ``m`` lines ``u v``."""
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise GraphInputError("empty input, expected header 'n m'", 1) from None
    n, m = _ints(header, lineno, 2)
    if n < 0 or m < 0:
        raise GraphInputError("n and m must be nonnegative", lineno)
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, line in lines:
        if len(edges) == m:
            raise GraphInputError(f"more than the declared {m} edges", lineno)
        u, v = _ints(line, lineno, 2)
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphInputError(f"vertex id out of range 1..{n}", lineno)
        if u == v:
            raise GraphInputError(f"loop at vertex {u}", lineno)
        e = canonical_edge(u, v)
        if e in seen:
            raise GraphInputError(f"duplicate edge {u}-{v}", lineno)
        seen.add(e)
        edges.append(e)
    if len(edges) != m:
        raise GraphInputError(f"header declares {m} edges but {len(edges)} given")
    return Graph(n, edges)


def serialize_graph(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def parse_labeling(text: str, n: int | None = None) -> Labeling:
    """Parse lines ``vertex label``."""
    mapping: dict[int, int] = {}
    for lineno, line in _content_lines(text):
        v, f = _ints(line, lineno, 2)
        if v in mapping:
            raise GraphInputError(f"vertex {v} labeled twice", lineno)
        mapping[v] = f
    return Labeling.from_mapping(mapping, n)


def serialize_labeling(f: Labeling) -> str:
    return "".join(f"{v} {lab}\n" for v, lab in enumerate(f.labels, start=1))


def export_dot(g: Graph, labeling: Labeling | None = None, name: str = "G") -> str:
    """Graphviz DOT text.

    With a labeling, vertices are emitted in label order on one rank so that a
    layout engine draws them on a line and edges as arcs above it.
    """
    lines = [f"graph {name} {{"]
    if labeling is None:
        for v in g.vertices:
            lines.append(f"  {v};")
    else:
        if labeling.n != g.n:
            raise GraphInputError("labeling size does not match graph order")
        lines.append("  rankdir=LR;")
        lines.append("  node [shape=circle];")
        order = labeling.inverse()
        for v in order:
            lines.append(f'  {v} [label="{v}\\nf={labeling(v)}"];')
        if order:
            lines.append("  { rank=same; " + " ".join(str(v) for v in order) + "; }")
            for a, b in zip(order, order[1:]):
                lines.append(f"  {a} -- {b} [style=invis];")
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
