"""The forcing relation on ordered vertex pairs and invertible-pair detection.

For a reflexive graph ``g``, ``(u, v)`` forces ``(u2, v2)`` when ``uu2`` and
``vv2`` are edges (loops count) while ``uv2`` and ``vu2`` are not. The
neighbours of ``(u, v)`` in the resulting pair graph are therefore exactly the
product ``(N[u] - N[v]) x (N[v] - N[u])``, which is how :class:`PairGraph`
stores them: two bit sets per node instead of an explicit edge list.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator

from .errors import InternalError
from .graph_core import Graph, PairNode, VertexOrdering, iter_bits

if TYPE_CHECKING:
    from .certificates import WeakEdgeAsteroid


def forces(g: Graph, p: PairNode, q: PairNode) -> bool:
    """Literal forcing test between two ordered pairs of distinct vertices."""
    (u, v), (u2, v2) = p, q
    if u == v or u2 == v2:
        raise ValueError("pair nodes need distinct vertices")
    if p == q:
        return True
    return (
        g.adjacent(u, u2)
        and g.adjacent(v, v2)
        and not g.adjacent(u, v2)
        and not g.adjacent(v, u2)
    )


class PairGraph:
    """Undirected graph on all ordered pairs of distinct vertices of ``g``.

    Components are computed on construction; they are the classes of the
    implication relation.
    """

    def __init__(self, g: Graph):
        self.graph = g
        n = self.n = g.n
        rows = g.rows
        # private[u][v] = N[u] - N[v]
        self._private = tuple(tuple(rows[u] & ~rows[v] for v in range(n)) for u in range(n))
        self._component = [-1] * (n * n)
        self.component_count = 0
        self._label_components()

    def nodes(self) -> Iterator[PairNode]:
        n = self.n
        return ((u, v) for u in range(n) for v in range(n) if u != v)

    def neighbors(self, p: PairNode) -> Iterator[PairNode]:
        """Neighbours of ``p`` in lexicographic order."""
        u, v = p
        first, second = self._private[u][v], self._private[v][u]
        for a in iter_bits(first):
            for b in iter_bits(second):
                if (a, b) != p:
                    yield (a, b)

    def has_edge(self, p: PairNode, q: PairNode) -> bool:
        if p == q:
            return False
        (u, v), (a, b) = p, q
        return bool(self._private[u][v] >> a & 1 and self._private[v][u] >> b & 1)

    def degree(self, p: PairNode) -> int:
        u, v = p
        first, second = self._private[u][v], self._private[v][u]
        d = first.bit_count() * second.bit_count()
        return d - 1 if first >> u & 1 and second >> v & 1 else d

    def edge_count(self) -> int:
        return sum(self.degree(p) for p in self.nodes()) // 2

    def component(self, p: PairNode) -> int:
        return self._component[p[0] * self.n + p[1]]

    def same_component(self, p: PairNode, q: PairNode) -> bool:
        return self.component(p) == self.component(q)

    def components(self) -> list[list[PairNode]]:
        out: list[list[PairNode]] = [[] for _ in range(self.component_count)]
        for p in self.nodes():
            out[self.component(p)].append(p)
        return out

    def _unvisited(self) -> list[int]:
        full = (1 << self.n) - 1
        return [full & ~(1 << a) for a in range(self.n)]

    def _label_components(self) -> None:
        n, private, comp = self.n, self._private, self._component
        unvisited = self._unvisited()
        label = 0
        for u in range(n):
            for v in range(n):
                if u == v or not unvisited[u] >> v & 1:
                    continue
                unvisited[u] &= ~(1 << v)
                comp[u * n + v] = label
                queue = deque([(u, v)])
                while queue:
                    x, y = queue.popleft()
                    second = private[y][x]
                    for a in iter_bits(private[x][y]):
                        new = second & unvisited[a]
                        if not new:
                            continue
                        unvisited[a] &= ~new
                        for b in iter_bits(new):
                            comp[a * n + b] = label
                            queue.append((a, b))
                label += 1
        self.component_count = label

    def shortest_path(self, source: PairNode, target: PairNode) -> list[PairNode] | None:
        """Breadth-first path; neighbours are expanded in lexicographic order."""
        if not self.same_component(source, target):
            return None
        if source == target:
            return [source]
        n, private = self.n, self._private
        unvisited = self._unvisited()
        unvisited[source[0]] &= ~(1 << source[1])
        parent: dict[PairNode, PairNode] = {}
        queue = deque([source])
        while queue:
            x, y = node = queue.popleft()
            second = private[y][x]
            for a in iter_bits(private[x][y]):
                new = second & unvisited[a]
                if not new:
                    continue
                unvisited[a] &= ~new
                for b in iter_bits(new):
                    parent[(a, b)] = node
                    if (a, b) == target:
                        path = [target]
                        while path[-1] != source:
                            path.append(parent[path[-1]])
                        return path[::-1]
                    queue.append((a, b))
        raise AssertionError("target in source component but unreachable")


def build_pair_graph(g: Graph) -> PairGraph:
    return PairGraph(g)


@dataclass(frozen=True)
class InvertiblePair:
    """Distinct ``u, v`` with a forcing path from ``(u, v)`` to ``(v, u)``."""

    u: int
    v: int
    path: tuple[PairNode, ...]

    @property
    def length(self) -> int:
        return len(self.path) - 1


def find_invertible_pair(g: Graph, pairs: PairGraph | None = None) -> InvertiblePair | None:
    """The lexicographically least invertible pair, with a shortest path, or None."""
    pairs = pairs or PairGraph(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if pairs.same_component((u, v), (v, u)):
                path = pairs.shortest_path((u, v), (v, u))
                return InvertiblePair(u, v, tuple(path))
    return None


@dataclass(frozen=True)
class Decision:
    """Verdict of a strong cocomparability recognizer plus its certificate.

    ``ordering`` is only attached to YES answers for small graphs; NO answers
    always carry a verified weak edge-asteroid.
    """

    is_strong: bool
    ordering: VertexOrdering | None = None
    asteroid: WeakEdgeAsteroid | None = None
    invertible_pair: InvertiblePair | None = None

    def __bool__(self) -> bool:
        return self.is_strong

    @property
    def verdict(self) -> str:
        return "YES" if self.is_strong else "NO"


def recognize_strong_cocomparability(
    g: Graph, ordering_bound: int = 8, node_budget: int = 200_000
) -> Decision:
    """Decide strong cocomparability through invertible pairs.

    YES answers carry a Slash-free ordering when ``g.n <= ordering_bound`` and
    the ordering search finishes within ``node_budget`` nodes.
    """
    from .certificates import extract_weak_edge_asteroid, search_strong_ordering

    pair = find_invertible_pair(g)
    if pair is not None:
        return Decision(False, asteroid=extract_weak_edge_asteroid(g, pair), invertible_pair=pair)
    ordering = None
    if g.n <= ordering_bound:
        search = search_strong_ordering(g, node_budget)
        if search.exhausted and search.ordering is None:
            raise InternalError("no invertible pair, yet no Slash-free ordering exists")
        ordering = search.ordering
    return Decision(True, ordering=ordering)
