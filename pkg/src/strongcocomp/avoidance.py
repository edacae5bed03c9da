"""The avoids relation between edges and the avoidance graph.

The vertices of the avoidance graph are the edges of ``g`` including one loop
per vertex. They are numbered loops first (loop ``vv`` is vertex ``v``), then
the non-loop edges in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .comparability import recognize_comparability
from .graph_core import EdgeRef, Graph, SimpleGraph, edge_ref, iter_bits


def _check_edge(g: Graph, e: EdgeRef) -> tuple[int, int]:
    x, y = e
    if not (0 <= x < g.n and 0 <= y < g.n) or not g.adjacent(x, y):
        raise ValueError(f"{e!r} is not an edge of the graph")
    return x, y


def _induced_shape(g: Graph, quad: tuple[int, int, int, int]) -> str | None:
    degrees = sorted(
        sum(g.adjacent(a, b) for b in quad if b != a) for a in quad
    )
    return {
        (1, 1, 1, 1): "2K2",
        (1, 1, 2, 2): "P4",
        (2, 2, 2, 2): "C4",
    }.get(tuple(degrees))


def induces_c4(g: Graph, a: int, b: int, c: int, d: int) -> bool:
    if len({a, b, c, d}) < 4:
        return False
    return _induced_shape(g, (a, b, c, d)) == "C4"


def avoids(g: Graph, e: EdgeRef, f: EdgeRef) -> bool:
    """Whether edge ``e`` avoids edge ``f`` (loops allowed on either side)."""
    u, u2 = _check_edge(g, e)
    v, v2 = _check_edge(g, f)
    if {u, u2} & {v, v2}:
        return False
    if u == u2 and v == v2:
        return not g.adjacent(u, v)
    if u == u2:
        return not g.adjacent(u, v) and not g.adjacent(u, v2)
    if v == v2:
        return not g.adjacent(v, u) and not g.adjacent(v, u2)
    return _induced_shape(g, (u, u2, v, v2)) is not None


@dataclass(frozen=True)
class AvoidanceGraph:
    """The avoidance graph as a :class:`SimpleGraph` plus its vertex table."""

    graph: SimpleGraph
    edges: tuple[EdgeRef, ...]

    @cached_property
    def index(self) -> dict[EdgeRef, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def vertex_of(self, e: EdgeRef) -> int:
        return self.index[edge_ref(*e)]

    def reflexive_complement(self) -> Graph:
        """Complement of the avoidance graph with a loop at every vertex."""
        full = (1 << self.graph.n) - 1
        return Graph(self.graph.n, tuple(full & ~row for row in self.graph.rows))


def build_avoidance_graph(g: Graph) -> AvoidanceGraph:
    n, rows = g.n, g.rows
    edges = tuple([(v, v) for v in range(n)] + g.edges())
    incident = [1 << v for v in range(n)]
    for i, (a, b) in enumerate(edges[n:], start=n):
        incident[a] |= 1 << i
        incident[b] |= 1 << i

    # an edge f avoids e = ab iff no endpoint of f is in N[a] & N[b] and
    # neither N[a] nor N[b] contains both endpoints of f
    leaves = []
    for a in range(n):
        mask = 0
        for x in iter_bits(((1 << n) - 1) & ~rows[a]):
            mask |= incident[x]
        leaves.append(mask)

    adj = []
    for a, b in edges:
        touching = 0
        for x in iter_bits(rows[a] & rows[b]):
            touching |= incident[x]
        adj.append(leaves[a] & leaves[b] & ~touching)
    return AvoidanceGraph(SimpleGraph(len(edges), tuple(adj)), edges)


def recognize_via_avoidance(g: Graph) -> bool:
    """Strong cocomparability test: the avoidance graph is a comparability graph."""
    return recognize_comparability(build_avoidance_graph(g).graph) is not None
