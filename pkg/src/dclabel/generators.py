"""Seeded graph families used by the tests and the ``gen`` subcommand."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import GraphInputError
from .graph import Graph

FAMILIES = (
    "path",
    "cycle",
    "star",
    "caterpillar",
    "t1",
    "t2",
    "triangle_chain",
    "random_gnm",
    "random_dcl",
)


@dataclass(frozen=True)
class GeneratorSpec:
    """Family name plus size parameters.

    ``n`` is the order (spine length for ``caterpillar``), ``m`` the edge
    count for ``random_gnm``, ``k`` leaves per spine vertex for
    ``caterpillar`` or the number of triangles for ``triangle_chain``.
    """

    family: str
    n: int = 0
    m: int = 0
    k: int = 0
    seed: int = 0


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphInputError(msg)


def path_graph(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def star_graph(n: int) -> Graph:
    """Center 1 joined to vertices 2..n."""
    _need(n >= 1, "star needs n >= 1")
    return Graph(n, [(1, i) for i in range(2, n + 1)])


def caterpillar_graph(spine: int, leaves: int) -> Graph:
    _need(spine >= 1 and leaves >= 0, "caterpillar needs spine >= 1 and leaves >= 0")
    edges = [(i, i + 1) for i in range(1, spine)]
    nxt = spine + 1
    for s in range(1, spine + 1):
        for _ in range(leaves):
            edges.append((s, nxt))
            nxt += 1
    return Graph(nxt - 1, edges)


def t1_graph() -> Graph:
    return Graph(7, [(1, 2), (1, 3), (1, 4), (2, 5), (3, 6), (4, 7)])


def t2_graph() -> Graph:
    return Graph(6, [(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)])


def triangle_chain(k: int) -> Graph:
    """Triangles ``(2i-1, 2i, 2i+1)`` for ``i = 1..k``, consecutive ones sharing a corner."""
    _need(k >= 1, "triangle_chain needs k >= 1")
    edges = []
    for i in range(1, k + 1):
        a, b, c = 2 * i - 1, 2 * i, 2 * i + 1
        edges += [(a, b), (a, c), (b, c)]
    return Graph(2 * k + 1, edges)


def random_gnm(n: int, m: int, seed: int = 0) -> Graph:
    _need(n >= 0 and 0 <= m <= n * (n - 1) // 2, f"random_gnm: cannot place {m} edges on {n} vertices")
    rng = random.Random(seed)
    if 2 * m > n * (n - 1) // 2:
        pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
        return Graph(n, rng.sample(pairs, m))
    chosen: set[tuple[int, int]] = set()
    while len(chosen) < m:
        u, v = rng.sample(range(1, n + 1), 2)
        chosen.add((min(u, v), max(u, v)))
    return Graph(n, sorted(chosen))


def random_dcl(n: int, seed: int = 0, triangle_rate: float = 0.3) -> Graph:
    """A random graph that has a degree complete labeling by construction.

    A random caterpillar whose spine edges are, at random, closed into
    triangles by fresh degree-2 vertices; vertex ids are shuffled.
    """
    _need(n >= 1, "random_dcl needs n >= 1")
    rng = random.Random(seed)
    spine = rng.randint(1, max(1, (n + 1) // 2))
    edges = [(i, i + 1) for i in range(1, spine)]
    free_spine_edges = list(range(1, spine))
    rng.shuffle(free_spine_edges)
    for v in range(spine + 1, n + 1):
        if free_spine_edges and rng.random() < triangle_rate:
            s = free_spine_edges.pop()
            edges += [(s, v), (s + 1, v)]
        else:
            edges.append((rng.randint(1, spine), v))
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return Graph(n, [(perm[u - 1], perm[v - 1]) for u, v in edges])


def generate(spec: GeneratorSpec) -> Graph:
    f = spec.family
    if f == "path":
        return path_graph(spec.n)
    if f == "cycle":
        return cycle_graph(spec.n)
    if f == "star":
        return star_graph(spec.n)
    if f == "caterpillar":
        return caterpillar_graph(spec.n, spec.k)
    if f == "t1":
        return t1_graph()
    if f == "t2":
        return t2_graph()
    if f == "triangle_chain":
        return triangle_chain(spec.k)
    if f == "random_gnm":
        return random_gnm(spec.n, spec.m, spec.seed)
    if f == "random_dcl":
        return random_dcl(spec.n, spec.seed)
    raise GraphInputError(f"unknown family {f!r}; expected one of {', '.join(FAMILIES)}")
