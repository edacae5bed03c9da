"""Bigraph constructions, the cocomparability-bigraph recognizer and fixture generators."""

from __future__ import annotations

import random as _random
from typing import Sequence

from .certificates import WeakEdgeAsteroid, search_strong_ordering
from .errors import InternalError
from .forcing import recognize_strong_cocomparability
from .graph_core import Bigraph, Graph, is_bigraph_slash_free


def bipartite_double(g: Graph) -> Bigraph:
    """B(G): ``u'`` is joined to ``v''`` exactly when ``uv`` is an edge (loops included).

    Part ``X`` holds the primed copies, part ``Y`` the double-primed ones, both
    indexed like ``g``; the biadjacency matrix is ``g``'s adjacency matrix.
    """
    return Bigraph(g.n, g.n, g.rows)


def close_both_sides(h: Bigraph) -> Graph:
    """H++: both parts completed to cliques. ``X`` keeps its indices, ``Y`` is shifted by ``nx``."""
    nx, ny = h.nx, h.ny
    x_part = (1 << nx) - 1
    y_part = ((1 << ny) - 1) << nx
    rows = [x_part | h.rows[x] << nx for x in range(nx)]
    for y in range(ny):
        cross = 0
        for x in range(nx):
            if h.rows[x] >> y & 1:
                cross |= 1 << x
        rows.append(y_part | cross)
    return Graph(nx + ny, tuple(rows))


def certify_cocomparability_bigraph(
    h: Bigraph, ordering_bound: int = 8
) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | WeakEdgeAsteroid | None]:
    """Decide whether ``h`` is a cocomparability bigraph, with a certificate.

    YES carries a Slash-free (row order, column order) pair read off a
    symmetric Slash-free ordering of H++ when it has at most
    ``ordering_bound`` vertices; NO carries a weak edge-asteroid of H++.
    """
    closed = close_both_sides(h)
    decision = recognize_strong_cocomparability(closed, ordering_bound=0)
    if not decision:
        return False, decision.asteroid
    if closed.n > ordering_bound:
        return True, None
    ordering = search_strong_ordering(closed).ordering
    if ordering is None:
        raise InternalError("H++ has no invertible pair but no Slash-free ordering")
    rows = tuple(v for v in ordering if v < h.nx)
    cols = tuple(v - h.nx for v in ordering if v >= h.nx)
    if not is_bigraph_slash_free(h, rows, cols):
        raise InternalError(f"projected ordering pair is not Slash-free: {rows} / {cols}")
    return True, (rows, cols)


def recognize_cocomparability_bigraph(h: Bigraph) -> bool:
    return recognize_strong_cocomparability(close_both_sides(h), ordering_bound=0).is_strong


# --- fixtures ------------------------------------------------------------

def interval_graph(intervals: Sequence[tuple[int, int]]) -> Graph:
    """Reflexive intersection graph of closed intervals."""
    n = len(intervals)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if intervals[i][0] <= intervals[j][1] and intervals[j][0] <= intervals[i][1]
    ]
    return Graph.from_edges(n, edges)


def _rng(seed) -> _random.Random:
    if seed is None:
        raise ValueError("random families need an explicit seed")
    return _random.Random(seed)


def _need(value: int, low: int, name: str) -> int:
    if not isinstance(value, int) or value < low:
        raise ValueError(f"{name} must be an integer >= {low}, got {value!r}")
    return value


def generate(family: str, **params) -> Graph | Bigraph:
    """Build a named fixture graph.

    Families: ``path(n)``, ``cycle(n)``, ``complete(n)``,
    ``complete_bipartite(p, q)``, ``random(n, p, seed)``,
    ``random_interval(n, seed, span=2n)`` and ``random_bigraph(nx, ny, p, seed)``.
    """
    if family == "path":
        n = _need(params["n"], 0, "n")
        return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))
    if family == "cycle":
        n = _need(params["n"], 3, "n")
        return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))
    if family == "complete":
        n = _need(params["n"], 0, "n")
        return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))
    if family == "complete_bipartite":
        p, q = _need(params["p"], 0, "p"), _need(params["q"], 0, "q")
        return Graph.from_edges(p + q, ((i, p + j) for i in range(p) for j in range(q)))
    if family == "random":
        n = _need(params["n"], 0, "n")
        prob = params.get("p", 0.5)
        if not 0 <= prob <= 1:
            raise ValueError(f"edge probability {prob} outside [0, 1]")
        rng = _rng(params.get("seed"))
        return Graph.from_edges(
            n, ((i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < prob)
        )
    if family == "random_interval":
        n = _need(params["n"], 0, "n")
        span = _need(params.get("span", 2 * n), 0, "span")
        rng = _rng(params.get("seed"))
        intervals = []
        for _ in range(n):
            a, b = rng.randint(0, span), rng.randint(0, span)
            intervals.append((min(a, b), max(a, b)))
        return interval_graph(intervals)
    if family == "random_bigraph":
        nx, ny = _need(params["nx"], 0, "nx"), _need(params["ny"], 0, "ny")
        prob = params.get("p", 0.5)
        if not 0 <= prob <= 1:
            raise ValueError(f"edge probability {prob} outside [0, 1]")
        rng = _rng(params.get("seed"))
        return Bigraph.from_edges(
            nx, ny, ((x, y) for x in range(nx) for y in range(ny) if rng.random() < prob)
        )
    raise ValueError(f"unknown graph family {family!r}")
