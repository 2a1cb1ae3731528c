"""Building a degree complete labeling from a path decomposition.

Each component's residual path is laid out left to right and labeled
``1..p+1``. Removed vertices are then inserted one at a time directly after a
labeled neighbor, shifting every later label up by one: triangle apexes after
the lower of their two path neighbors, then leaves after their only neighbor.
Insertions are done on a linked list so each costs O(1).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import GraphInputError, InconsistentDecompositionError
from .graph import Graph, Labeling, components
from .recognition import (
    Decomposition,
    UnlabeledWitness,
    check_iii,
    find_unlabeled_obstruction,
    has_degree_complete_labeling,
)

METHODS = {"x2": "iii", "f": "iv", "iii": "iii", "iv": "iv"}


class NotACaterpillarError(GraphInputError):
    def __init__(self, message, witness: UnlabeledWitness | None = None):
        super().__init__(message)
        self.witness = witness


class InsertionState:
    """A partial labeling kept as a left-to-right sequence of vertices.

    The label of a vertex is its 1-based position in the sequence, so
    inserting ``x`` right after ``u`` gives ``x`` the label ``f(u) + 1`` and
    bumps every label above ``f(u)``.
    """

    def __init__(self, path: Sequence[int]):
        self.path = tuple(path)
        self.head = self.path[0] if self.path else None
        self._next: dict[int, int | None] = {}
        for a, b in zip(self.path, self.path[1:]):
            self._next[a] = b
        if self.path:
            self._next[self.path[-1]] = None
        if len(self._next) != len(self.path):
            raise InconsistentDecompositionError("path repeats a vertex")

    def is_labeled(self, v: int) -> bool:
        return v in self._next

    def __len__(self):
        return len(self._next)

    def insert_after(self, x: int, u: int) -> InsertionState:
        if x in self._next:
            raise InconsistentDecompositionError(f"vertex {x} is already labeled")
        if u not in self._next:
            raise InconsistentDecompositionError(f"vertex {u} is not labeled yet")
        self._next[x] = self._next[u]
        self._next[u] = x
        return self

    def order(self) -> list[int]:
        out = []
        v = self.head
        while v is not None:
            out.append(v)
            v = self._next[v]
        return out

    def labels(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order(), start=1)}


def _insert_leaves(g: Graph, state: InsertionState, x1: Iterable[int]) -> None:
    # descending ids: leaves sharing a neighbor end up in ascending order after it
    for x in sorted(x1, reverse=True):
        (u,) = g.adj[x]
        if not state.is_labeled(u):
            raise InconsistentDecompositionError(f"leaf {x} hangs off unlabeled vertex {u}")
        state.insert_after(x, u)


def label_component_via_x2(
    g: Graph, path: Sequence[int], x1: Iterable[int], x2: Iterable[int]
) -> dict[int, int]:
    """Labels ``1..k`` for one component with residual ``path`` after deleting leaves and apexes."""
    state = InsertionState(path)
    pos = {v: i for i, v in enumerate(path)}
    for v in sorted(x2):
        nbrs = sorted(g.adj[v], key=lambda y: pos.get(y, -1))
        if len(nbrs) != 2 or not all(y in pos for y in nbrs):
            raise InconsistentDecompositionError(f"apex {v} does not sit on the residual path")
        lo, hi = nbrs
        if pos[hi] - pos[lo] != 1:
            raise InconsistentDecompositionError(
                f"apex {v}: neighbors {lo}, {hi} are not consecutive on the path"
            )
        state.insert_after(v, lo)
    _insert_leaves(g, state, x1)
    return state.labels()


def label_component_via_f(g: Graph, path: Sequence[int], x1: Iterable[int]) -> dict[int, int]:
    """Labels ``1..k`` for one component whose residual after deleting leaves and ``F`` is ``path``."""
    state = InsertionState(path)
    _insert_leaves(g, state, x1)
    return state.labels()


def _trivial_component(g: Graph, comp: list[int]) -> dict[int, int] | None:
    """Components of at most two vertices, and bare paths, are labeled along themselves."""
    if len(comp) <= 2:
        return {v: i for i, v in enumerate(comp, start=1)}
    adj = g.adj
    ends = [v for v in comp if len(adj[v]) == 1]
    if len(ends) != 2 or any(len(adj[v]) != 2 for v in comp if v not in ends):
        return None
    walk, prev = [ends[0]], 0
    while len(walk) < len(comp):
        (nxt,) = adj[walk[-1]] - {prev}
        prev = walk[-1]
        walk.append(nxt)
    return {v: i for i, v in enumerate(walk, start=1)}


def labeling_from_decomposition(g: Graph, dec: Decomposition) -> Labeling:
    """Glue per-component labelings into consecutive label blocks.

    Components are taken in order of their smallest vertex id.
    """
    path_of = {}
    for path in dec.paths:
        for v in path:
            path_of[v] = path
    labels = [0] * g.n
    offset = 0
    for comp in components(g):
        local = _trivial_component(g, comp)
        if local is None:
            anchor = next((v for v in comp if v in path_of), None)
            if anchor is None:
                raise InconsistentDecompositionError(f"component of {comp[0]} has no residual path")
            path = path_of[anchor]
            members = set(comp)
            if len(set(path) & members) != len(path):
                raise InconsistentDecompositionError("residual path leaves its component")
            x1 = dec.x1 & members
            if dec.route == "iii":
                local = label_component_via_x2(g, path, x1, dec.x2 & members)
            else:
                local = label_component_via_f(g, path, x1)
            if len(local) != len(comp):
                raise InconsistentDecompositionError(
                    f"component of {comp[0]}: labeled {len(local)} of {len(comp)} vertices"
                )
        for v, lab in local.items():
            labels[v - 1] = offset + lab
        offset += len(comp)
    return Labeling(labels)


def label_graph(g: Graph, route: str = "iii") -> Labeling | UnlabeledWitness:
    """A degree complete labeling of ``g``, or the obstruction proving none exists.

    ``route`` is ``"iii"`` (delete apexes, alias ``"x2"``) or ``"iv"``
    (delete one edge per triangle, alias ``"f"``).
    """
    if route not in METHODS:
        raise GraphInputError(f"unknown labeling route {route!r}")
    ok, evidence = has_degree_complete_labeling(g, METHODS[route])
    if not ok:
        return evidence
    return labeling_from_decomposition(g, evidence)


def label_caterpillar(g: Graph) -> Labeling:
    """Spine labeled in order, each leaf right after its spine vertex."""
    comps = components(g)
    if g.n == 0 or len(comps) != 1 or g.m != g.n - 1:
        raise NotACaterpillarError("graph is not a tree", find_unlabeled_obstruction(g))
    dec = check_iii(g)
    if dec is None:
        raise NotACaterpillarError(
            "tree is not a caterpillar", find_unlabeled_obstruction(g)
        )
    return labeling_from_decomposition(g, dec)
