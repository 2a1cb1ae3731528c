"""Recognizing graphs that admit a degree complete labeling.

Three equivalent tests are offered:

* route ``ii``  -- no subgraph isomorphic to T1 (spider with three legs of
  length 2), T2 (triangle with a pendant at each corner) or a cycle of length
  at least 4;
* route ``iii`` -- deleting the leaves ``X1`` and a greedy set ``X2`` of
  degree-2 triangle apexes leaves a disjoint union of paths;
* route ``iv``  -- deleting the leaves and a greedy set ``F`` holding one edge
  per triangle leaves a disjoint union of paths.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable

from .errors import CharacterizationError, GraphInputError
from .graph import (
    Edge,
    Graph,
    canonical_edge,
    is_disjoint_union_of_paths,
    remove_edges,
    remove_vertices,
)

ROUTES = ("ii", "iii", "iv")


@dataclass(frozen=True)
class Decomposition:
    x1: frozenset[int]
    x2: frozenset[int]
    f: frozenset[Edge]
    paths: tuple[tuple[int, ...], ...]
    route: str


@dataclass(frozen=True)
class UnlabeledWitness:
    """An embedded copy of T1, T2 or a cycle of length >= 4.

    For T1 the vertices are ``(center, a1, a2, a3, b1, b2, b3)``; for T2
    ``(t1, t2, t3, p1, p2, p3)`` with ``p_i`` the pendant at ``t_i``; for a
    cycle they are listed in cyclic order.
    """

    kind: str
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __str__(self):
        return f"{self.kind} " + " ".join(map(str, self.vertices))


# --- X1, X2, F ----------------------------------------------------------------

def compute_X1(g: Graph) -> frozenset[int]:
    adj = g.adj
    return frozenset(v for v in g.vertices if len(adj[v]) == 1)


def _apex_pair(g: Graph, v: int) -> tuple[int, int] | None:
    """Neighbors ``(u, w)`` of ``v`` if ``v`` is a degree-2 vertex closing the
    triangle ``uvw`` and is the only common neighbor of ``u`` and ``w``."""
    adj = g.adj
    if len(adj[v]) != 2:
        return None
    u, w = sorted(adj[v])
    if w not in adj[u]:
        return None
    au, aw = adj[u], adj[w]
    if len(au) > len(aw):
        au, aw = aw, au
    if any(x != v and x in aw for x in au):
        return None
    return u, w


def _vertex_order(g: Graph, order: Iterable[int] | None) -> list[int]:
    if order is None:
        return list(g.vertices)
    order = list(order)
    if sorted(order) != list(g.vertices):
        raise GraphInputError("vertex order must be a permutation of 1..n")
    return order


def compute_X2(g: Graph, order: Iterable[int] | None = None) -> frozenset[int]:
    """Greedy set of degree-2 triangle apexes, scanned in ``order`` (ascending by default).

    A vertex joins if its two neighbors are adjacent, it is their unique common
    neighbor, and neither neighbor has already joined.
    """
    x2: set[int] = set()
    for v in _vertex_order(g, order):
        pair = _apex_pair(g, v)
        if pair is not None and pair[0] not in x2 and pair[1] not in x2:
            x2.add(v)
    return frozenset(x2)


def compute_F(g: Graph, order: Iterable[int] | None = None) -> frozenset[Edge]:
    """Greedy set holding at most one edge per triangle.

    Candidates are edges ``uw`` opposite a degree-2 apex ``v`` that is the
    unique common neighbor of ``u`` and ``w``, visited by apex in ``order``
    (ascending by default); ``uw`` joins unless ``uv`` or ``vw`` already has.
    Restricting to degree-2 apexes is what keeps ``G - X1 - F`` a path on
    graphs such as a triangle with a tail; see ``compute_F_edge_scan``.
    """
    f: set[Edge] = set()
    for v in _vertex_order(g, order):
        pair = _apex_pair(g, v)
        if pair is None:
            continue
        u, w = pair
        if canonical_edge(u, v) in f or canonical_edge(v, w) in f:
            continue
        f.add((u, w))
    return frozenset(f)


def compute_F_edge_scan(g: Graph, edge_order: Iterable[Edge] | None = None) -> frozenset[Edge]:
    """Unrestricted edge scan: add ``uw`` whenever ``u, w`` have exactly one
    common neighbor ``v`` and neither ``uv`` nor ``vw`` was added.

    Kept for comparison only. It may pick the edge opposite a high-degree
    apex, e.g. on edges 12, 13, 23, 34, 45 it selects 12 and ``G - X1 - F``
    then has a degree-3 vertex although the graph is labelable.
    """
    adj = g.adj
    edges = list(g.edges) if edge_order is None else [canonical_edge(*e) for e in edge_order]
    f: set[Edge] = set()
    for u, w in edges:
        common = adj[u] & adj[w]
        if len(common) != 1:
            continue
        (v,) = common
        if canonical_edge(u, v) in f or canonical_edge(v, w) in f:
            continue
        f.add((u, w))
    return frozenset(f)


# --- routes iii and iv --------------------------------------------------------

def _residual_paths(h: Graph, remap: tuple[int, ...] | None) -> tuple[tuple[int, ...], ...] | None:
    ok, paths = is_disjoint_union_of_paths(h)
    if not ok:
        return None
    if remap is None:
        return tuple(tuple(p) for p in paths)
    return tuple(tuple(remap[v] for v in p) for p in paths)


def check_iii(g: Graph, order: Iterable[int] | None = None) -> Decomposition | None:
    """Decomposition if ``G - X1 - X2`` is a disjoint union of paths, else ``None``."""
    x1 = compute_X1(g)
    x2 = compute_X2(g, order)
    h, remap = remove_vertices(g, x1 | x2)
    paths = _residual_paths(h, remap)
    if paths is None:
        return None
    return Decomposition(x1, x2, frozenset(), paths, "iii")


def check_iv(g: Graph, order: Iterable[int] | None = None) -> Decomposition | None:
    """Decomposition if ``G - X1 - F`` is a disjoint union of paths, else ``None``."""
    x1 = compute_X1(g)
    f = compute_F(g, order)
    h, remap = remove_vertices(remove_edges(g, f), x1)
    paths = _residual_paths(h, remap)
    if paths is None:
        return None
    return Decomposition(x1, frozenset(), f, paths, "iv")


# --- route ii: forbidden subgraphs ------------------------------------------

def biconnected_blocks(g: Graph) -> list[list[Edge]]:
    """Edge lists of the blocks of ``g`` (isolated vertices contribute none)."""
    adj = g.adj
    disc = [0] * (g.n + 1)
    low = [0] * (g.n + 1)
    clock = 1
    blocks: list[list[Edge]] = []
    for root in g.vertices:
        if disc[root] or not adj[root]:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, 0, iter(sorted(adj[root])))]
        edge_stack: list[Edge] = []
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if not disc[w]:
                    disc[w] = low[w] = clock
                    clock += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(sorted(adj[w]))))
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                block = []
                while True:
                    e = edge_stack.pop()
                    block.append(canonical_edge(*e))
                    if e == (u, v):
                        break
                blocks.append(sorted(block))
    return blocks


def _cycle_edges(cycle: list[int]) -> tuple[Edge, ...]:
    return tuple(canonical_edge(a, b) for a, b in zip(cycle, cycle[1:] + cycle[:1]))


def _long_cycle_in_block(block: list[Edge]) -> list[int]:
    """A cycle of length >= 4 inside a block with at least four vertices."""
    badj: dict[int, list[int]] = {}
    for u, v in block:
        badj.setdefault(u, []).append(v)
        badj.setdefault(v, []).append(u)
    for nbrs in badj.values():
        nbrs.sort()

    # any cycle: BFS tree plus one non-tree edge
    root = min(badj)
    parent = {root: 0}
    depth = {root: 0}
    queue = deque([root])
    cycle = None
    while queue and cycle is None:
        x = queue.popleft()
        for y in badj[x]:
            if y not in parent:
                parent[y] = x
                depth[y] = depth[x] + 1
                queue.append(y)
            elif y != parent[x]:
                left, right = [x], [y]
                a, b = x, y
                while a != b:
                    if depth[a] >= depth[b]:
                        a = parent[a]
                        left.append(a)
                    else:
                        b = parent[b]
                        right.append(b)
                cycle = left + right[-2::-1]
                break
    assert cycle is not None
    if len(cycle) >= 4:
        return cycle

    # a triangle: leave it through some corner and come back to another one
    tri = set(cycle)
    for x in cycle:
        y = next((y for y in badj[x] if y not in tri), None)
        if y is not None:
            break
    prev = {y: 0}
    queue = deque([y])
    z = None
    while queue and z is None:
        a = queue.popleft()
        for b in badj[a]:
            if b == x or b in prev:
                continue
            prev[b] = a
            if b in tri:
                z = b
                break
            queue.append(b)
    assert z is not None
    route = [z]
    while route[-1] != y:
        route.append(prev[route[-1]])
    (w,) = tri - {x, z}
    return [x] + route[::-1] + [w]


def _find_long_cycle(g: Graph, blocks: list[list[Edge]]) -> UnlabeledWitness | None:
    for block in blocks:
        if len({v for e in block for v in e}) >= 4:
            cycle = _long_cycle_in_block(block)
            return UnlabeledWitness("C", tuple(cycle), _cycle_edges(cycle))
    return None


def _distinct_representatives(cands: list[list[int]]) -> tuple[int, ...] | None:
    for pick in product(*cands):
        if len(set(pick)) == len(pick):
            return pick
    return None


def _find_t2(g: Graph, triangles: Iterable[tuple[int, int, int]]) -> UnlabeledWitness | None:
    adj = g.adj
    for tri in triangles:
        inside = set(tri)
        # three candidates each suffice for a system of 3 distinct representatives
        cands = [sorted(adj[t] - inside)[:3] for t in tri]
        pick = _distinct_representatives(cands)
        if pick is not None:
            a, b, c = tri
            edges = [(a, b), (a, c), (b, c)] + [canonical_edge(t, p) for t, p in zip(tri, pick)]
            return UnlabeledWitness("T2", tri + pick, tuple(edges))
    return None


def _t1_at(g: Graph, c: int) -> UnlabeledWitness | None:
    adj = g.adj
    useful = [a for a in sorted(adj[c]) if len(adj[a]) >= 2]
    # a leg's far end must avoid c, the two other legs' near ends and far ends:
    # with five candidates one always survives
    cands = {a: sorted(adj[a] - {c})[:5] for a in useful}
    for legs in combinations(useful, 3):
        blocked = set(legs) | {c}
        options = [[b for b in cands[a] if b not in blocked] for a in legs]
        pick = _distinct_representatives(options)
        if pick is not None:
            edges = [canonical_edge(c, a) for a in legs] + [
                canonical_edge(a, b) for a, b in zip(legs, pick)
            ]
            return UnlabeledWitness("T1", (c, *legs, *pick), tuple(edges))
    return None


def find_T1(g: Graph) -> UnlabeledWitness | None:
    adj = g.adj
    for c in g.vertices:
        if len(adj[c]) >= 3:
            w = _t1_at(g, c)
            if w is not None:
                return w
    return None


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    adj = g.adj
    out = []
    for u, v in g.edges:
        for w in sorted(adj[u] & adj[v]):
            if w > v:
                out.append((u, v, w))
    return out


def find_unlabeled_obstruction(g: Graph) -> UnlabeledWitness | None:
    """A copy of a cycle of length >= 4, T2 or T1 in ``g`` (searched in that order)."""
    blocks = biconnected_blocks(g)
    w = _find_long_cycle(g, blocks)
    if w is not None:
        return w
    # every block is now an edge or a triangle
    tris = [tuple(sorted({v for e in b for v in e})) for b in blocks if len(b) == 3]
    w = _find_t2(g, tris)
    if w is not None:
        return w
    return find_T1(g)


def has_degree_complete_labeling(
    g: Graph, route: str = "iii"
) -> tuple[bool, Decomposition | UnlabeledWitness]:
    """Decide labelability; the evidence is a decomposition or an obstruction.

    Routes ``iii`` and ``iv`` decide by decomposition and then look up the
    obstruction on failure; route ``ii`` searches for the obstruction first.
    Any disagreement raises ``CharacterizationError``.
    """
    if route not in ROUTES:
        raise GraphInputError(f"unknown route {route!r}; expected one of {', '.join(ROUTES)}")
    if route == "ii":
        w = find_unlabeled_obstruction(g)
        if w is not None:
            return False, w
        dec = check_iii(g)
        if dec is None:
            raise CharacterizationError("no obstruction found but G - X1 - X2 is not a path union")
        return True, dec
    dec = check_iii(g) if route == "iii" else check_iv(g)
    if dec is not None:
        return True, dec
    w = find_unlabeled_obstruction(g)
    if w is None:
        raise CharacterizationError(f"route {route} rejected the graph but no obstruction exists")
    return False, w
