"""Certificates for strong cocomparability and the conversions between them.

NO answers are witnessed by weak edge-asteroids: an odd list of edges
``e_0 .. e_2k`` where ``e_i`` avoids every edge of a walk that starts by
traversing ``e_{i+k}`` and ends by traversing ``e_{i+k+1}`` (indices mod
``2k+1``). YES answers are witnessed by symmetric Slash-free orderings.

Every producer in this module runs the matching verifier before returning and
raises :class:`InternalError` if it fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .avoidance import AvoidanceGraph, avoids, build_avoidance_graph, induces_c4
from .comparability import Orientation
from .errors import CertificateError, InternalError
from .forcing import InvertiblePair, PairGraph
from .graph_core import EdgeRef, Graph, PairNode, VertexOrdering, edge_ref, is_slash_free_ordering

Walk = tuple[int, ...]


@dataclass(frozen=True)
class WeakEdgeAsteroid:
    edges: tuple[EdgeRef, ...]
    walks: tuple[Walk, ...]

    @property
    def k(self) -> int:
        return (len(self.edges) - 1) // 2


@dataclass(frozen=True)
class Asteroid:
    vertices: tuple[int, ...]
    walks: tuple[Walk, ...]

    @property
    def k(self) -> int:
        return (len(self.vertices) - 1) // 2


@dataclass(frozen=True)
class OrderingSearch:
    ordering: VertexOrdering | None
    exhausted: bool
    nodes: int


def _check_structure(count: int, walks: Sequence[Walk], n: int, min_walk: int) -> None:
    if count < 3 or count % 2 == 0:
        raise CertificateError(f"need an odd number (at least 3) of members, got {count}")
    if len(walks) != count:
        raise CertificateError(f"{count} members but {len(walks)} walks")
    for i, walk in enumerate(walks):
        if len(walk) < min_walk:
            raise CertificateError(f"walk {i} has fewer than {min_walk} vertices")
        if any(not 0 <= x < n for x in walk):
            raise CertificateError(f"walk {i} leaves the vertex range 0..{n - 1}")


def _is_walk(g: Graph, walk: Walk) -> bool:
    return all(g.adjacent(a, b) for a, b in zip(walk, walk[1:]))


def verify_weak_edge_asteroid(g: Graph, w: WeakEdgeAsteroid) -> bool:
    """Check a weak edge-asteroid against ``g``.

    Raises :class:`CertificateError` for malformed input (wrong member count,
    missing walks, empty walks, vertices out of range); returns False when the
    certificate is well formed but some condition fails in ``g``.
    """
    count = len(w.edges)
    _check_structure(count, w.walks, g.n, min_walk=2)
    if any(not (0 <= x < g.n and 0 <= y < g.n) for x, y in w.edges):
        raise CertificateError("certificate edge outside the vertex range")
    edges = [edge_ref(x, y) for x, y in w.edges]
    if not all(g.adjacent(x, y) for x, y in edges):
        return False
    k = (count - 1) // 2
    for i, walk in enumerate(w.walks):
        if not _is_walk(g, walk):
            return False
        if edge_ref(walk[0], walk[1]) != edges[(i + k) % count]:
            return False
        if edge_ref(walk[-2], walk[-1]) != edges[(i + k + 1) % count]:
            return False
        for a, b in set(zip(walk, walk[1:])):
            if not avoids(g, edges[i], edge_ref(a, b)):
                return False
    return True


def verify_asteroid(h: Graph, a: Asteroid) -> bool:
    """Check an asteroid in the reflexive graph ``h``.

    Walk ``i`` must run from ``x_{i+k}`` to ``x_{i+k+1}`` and contain no
    vertex of the closed neighbourhood of ``x_i``.
    """
    count = len(a.vertices)
    _check_structure(count, a.walks, h.n, min_walk=1)
    if any(not 0 <= x < h.n for x in a.vertices):
        raise CertificateError("asteroid vertex outside the vertex range")
    k = (count - 1) // 2
    for i, walk in enumerate(a.walks):
        if walk[0] != a.vertices[(i + k) % count] or walk[-1] != a.vertices[(i + k + 1) % count]:
            return False
        if not _is_walk(h, walk):
            return False
        blocked = h.rows[a.vertices[i]]
        if any(blocked >> x & 1 for x in walk):
            return False
    return True


def _require_valid(g: Graph, w: WeakEdgeAsteroid) -> None:
    if not verify_weak_edge_asteroid(g, w):
        raise ValueError("not a weak edge-asteroid of this graph")


def extract_weak_edge_asteroid(g: Graph, ip: InvertiblePair) -> WeakEdgeAsteroid:
    """Turn a forcing path from ``(u, v)`` to ``(v, u)`` into a weak edge-asteroid.

    The path ``(p_0, q_0) .. (p_t, q_t)`` unfolds into the closed walk
    ``p_0 .. p_{t-1} q_0 .. q_{t-1}``; odd and even ``t`` use different edge
    selections.
    """
    path = ip.path
    t = len(path) - 1
    if path[0] != (ip.u, ip.v) or path[-1] != (ip.v, ip.u):
        raise ValueError("path does not run from (u, v) to (v, u)")
    if t < 2:
        # t = 1 would need uv and vu both non-edges while uu is an edge
        raise ValueError(f"invertible pair path of length {t} is impossible in a reflexive graph")
    for p, q in zip(path, path[1:]):
        if p == q or not g.adjacent(p[0], q[0]) or not g.adjacent(p[1], q[1]) \
                or g.adjacent(p[0], q[1]) or g.adjacent(p[1], q[0]):
            raise ValueError(f"{p} does not force {q}")

    u = [p for p, _ in path[:t]] + [q for _, q in path[:t]]
    size = 2 * t

    def walk(*idx: int) -> Walk:
        return tuple(u[i % size] for i in idx)

    if t % 2:
        edges = [edge_ref(u[2 * i], u[2 * i + 1]) for i in range(t)]
        walks = [walk(*range(2 * i + t - 1, 2 * i + t + 3)) for i in range(t)]
    else:
        edges = [edge_ref(u[i], u[i + 1]) for i in range(size - 1)]
        walks = []
        for i in range(size - 1):
            if i <= t - 2:
                walks.append(walk(i + t - 1, i + t, i + t + 1))
            elif i == t - 1:
                walks.append(walk(size - 2, size - 1, 0, 1))
            else:
                walks.append(walk(i - t, i - t + 1, i - t + 2))

    w = WeakEdgeAsteroid(tuple(edges), tuple(walks))
    if not verify_weak_edge_asteroid(g, w):
        raise InternalError(f"extracted weak edge-asteroid fails verification: {w}")
    return w


def _chain_endpoints(g: Graph, e: EdgeRef, f: EdgeRef) -> tuple[int, int]:
    if induces_c4(g, e[0], e[1], f[0], f[1]):
        return min((a, b) for a in e for b in f if g.adjacent(a, b))
    return e[0], f[0]


def invertible_pair_from_wea(
    g: Graph, w: WeakEdgeAsteroid, pairs: PairGraph | None = None
) -> tuple[PairNode, PairNode]:
    """Recover an invertible pair ``(u_0, v_k)`` from a weak edge-asteroid.

    For each ``i`` an endpoint ``u_i`` of ``e_i`` and ``v_{i+k}`` of
    ``e_{i+k}`` are picked, adjacent ones when the two edges induce a C4.
    The pair is checked against pair-graph reachability before returning.
    """
    _require_valid(g, w)
    count, k = len(w.edges), w.k
    edges = [edge_ref(*e) for e in w.edges]
    u0, vk = _chain_endpoints(g, edges[0], edges[k % count])
    pairs = pairs or PairGraph(g)
    forward, backward = (u0, vk), (vk, u0)
    if not pairs.same_component(forward, backward):
        raise InternalError(f"{forward} and {backward} are not linked by forcing")
    return forward, backward


def wea_to_complement_asteroid(
    g: Graph, w: WeakEdgeAsteroid, avoidance: AvoidanceGraph | None = None
) -> Asteroid:
    """Re-read a weak edge-asteroid as an asteroid of the complemented avoidance graph.

    Asteroid vertices are the certificate's edges as avoidance-graph vertices;
    each walk becomes the sequence of edges it traverses.
    """
    _require_valid(g, w)
    av = avoidance or build_avoidance_graph(g)
    vertices = tuple(av.vertex_of(e) for e in w.edges)
    walks = tuple(
        tuple(av.vertex_of((a, b)) for a, b in zip(walk, walk[1:])) for walk in w.walks
    )
    asteroid = Asteroid(vertices, walks)
    if not verify_asteroid(av.reflexive_complement(), asteroid):
        raise InternalError(f"re-encoded asteroid fails verification: {asteroid}")
    return asteroid


def _bridge(g: Graph, target: EdgeRef, e: EdgeRef, f: EdgeRef) -> tuple[int, int]:
    candidates = [
        (edge_ref(p, q), p, q)
        for p in set(e)
        for q in set(f)
        if g.adjacent(p, q) and avoids(g, target, edge_ref(p, q))
    ]
    if not candidates:
        raise InternalError(f"no edge between {e} and {f} avoids {target}")
    _, p, q = min(candidates)
    return p, q


def complement_asteroid_to_wea(
    g: Graph, a: Asteroid, avoidance: AvoidanceGraph | None = None
) -> WeakEdgeAsteroid:
    """Turn an asteroid of the complemented avoidance graph back into a weak edge-asteroid.

    Consecutive walk elements ``e, f`` that do not avoid each other are joined
    by the least edge from an endpoint of ``e`` to an endpoint of ``f`` that
    the target edge avoids; ``e`` is re-traversed when needed to reach it.
    """
    av = avoidance or build_avoidance_graph(g)
    if not verify_asteroid(av.reflexive_complement(), a):
        raise ValueError("not an asteroid of the complemented avoidance graph")
    edges = tuple(av.edges[x] for x in a.vertices)
    walks = []
    for i, seq in enumerate(a.walks):
        current = av.edges[seq[0]]
        walk = list(current)
        for x in seq[1:]:
            f = av.edges[x]
            if f == current:
                continue
            p, q = _bridge(g, edges[i], current, f)
            if walk[-1] != p:
                walk.append(p)
            walk.append(q)
            if edge_ref(p, q) != f:
                walk.append(f[1] if q == f[0] else f[0])
            current = f
        walks.append(tuple(walk))
    w = WeakEdgeAsteroid(edges, tuple(walks))
    if not verify_weak_edge_asteroid(g, w):
        raise InternalError(f"rebuilt weak edge-asteroid fails verification: {w}")
    return w


def search_strong_ordering(g: Graph, node_budget: int | None = None) -> OrderingSearch:
    """Backtracking search for a symmetric Slash-free ordering.

    Vertices are tried in increasing index order, so the first ordering found
    is the lexicographically least one. A prefix is abandoned as soon as it
    contains a Slash whose rows and columns are all placed. ``node_budget``
    bounds the number of placements (None means unbounded).
    """
    n, rows = g.n, g.rows
    # placed_adj[v]: positions of placed vertices adjacent to v
    placed_adj = [0] * n
    order: list[int] = []
    used = 0
    nodes = 0

    def slash_with(w: int) -> bool:
        rw = placed_adj[w]
        for v in order:
            rv = placed_adj[v]
            zero_one = rw & ~rv
            if not zero_one:
                continue
            one_zero = rv & ~rw
            if one_zero and (zero_one & -zero_one).bit_length() < one_zero.bit_length():
                return True
        return False

    def extend() -> bool | None:
        nonlocal used, nodes
        if len(order) == n:
            return True
        p = len(order)
        for w in range(n):
            if used >> w & 1:
                continue
            if node_budget is not None and nodes >= node_budget:
                return None
            nodes += 1
            if slash_with(w):
                continue
            order.append(w)
            used |= 1 << w
            bit = 1 << p
            for v in range(n):
                if rows[w] >> v & 1:
                    placed_adj[v] |= bit
            found = extend()
            if found is None or found:
                return found
            for v in range(n):
                placed_adj[v] &= ~bit
            used &= ~(1 << w)
            order.pop()
        return False

    found = extend()
    if found is None:
        return OrderingSearch(None, False, nodes)
    if not found:
        return OrderingSearch(None, True, nodes)
    ordering = tuple(order)
    if not is_slash_free_ordering(g, ordering):
        raise InternalError(f"search returned an ordering with a Slash: {ordering}")
    return OrderingSearch(ordering, True, nodes)


# --- text blocks ---------------------------------------------------------

def format_certificate(cert) -> str:
    """Line-oriented text block: a kind tag followed by the certificate body."""
    if isinstance(cert, WeakEdgeAsteroid):
        lines = ["weak-edge-asteroid", f"edges {len(cert.edges)}"]
        lines += [f"{x} {y}" for x, y in cert.edges]
        lines.append(f"walks {len(cert.walks)}")
        lines += [" ".join(map(str, walk)) for walk in cert.walks]
    elif isinstance(cert, Asteroid):
        lines = ["asteroid", " ".join(map(str, cert.vertices)), f"walks {len(cert.walks)}"]
        lines += [" ".join(map(str, walk)) for walk in cert.walks]
    elif isinstance(cert, Orientation):
        arcs = cert.arcs()
        lines = ["orientation", f"arcs {len(arcs)}"] + [f"{a} {b}" for a, b in arcs]
    elif isinstance(cert, tuple) and len(cert) == 2 and all(isinstance(c, tuple) for c in cert):
        lines = ["bigraph-ordering", " ".join(map(str, cert[0])), " ".join(map(str, cert[1]))]
    elif isinstance(cert, tuple):
        lines = ["ordering", " ".join(map(str, cert))]
    else:
        raise TypeError(f"no text form for {type(cert).__name__}")
    return "\n".join(lines) + "\n"


def _counted(lines: list[str], at: int, tag: str) -> tuple[int, int]:
    head = lines[at].split()
    if len(head) != 2 or head[0] != tag or not head[1].isdigit():
        raise CertificateError(f"expected '{tag} <count>' at line {at + 1}")
    return int(head[1]), at + 1


def _row(line: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in line.split())
    except ValueError:
        raise CertificateError(f"non-integer token in {line!r}") from None


def parse_certificate(text: str, n: int | None = None):
    """Inverse of :func:`format_certificate`. ``n`` is the orientation's vertex count."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise CertificateError("empty certificate block")
    tag = lines[0]
    try:
        if tag == "weak-edge-asteroid":
            m, at = _counted(lines, 1, "edges")
            edges = tuple(_row(ln) for ln in lines[at:at + m])
            if any(len(e) != 2 for e in edges):
                raise CertificateError("edge lines need two vertices")
            w, at = _counted(lines, at + m, "walks")
            walks = tuple(_row(ln) for ln in lines[at:at + w])
            if len(walks) != w or at + w != len(lines):
                raise CertificateError("walk count does not match body")
            return WeakEdgeAsteroid(edges, walks)
        if tag == "asteroid":
            vertices = _row(lines[1])
            w, at = _counted(lines, 2, "walks")
            walks = tuple(_row(ln) for ln in lines[at:at + w])
            if len(walks) != w or at + w != len(lines):
                raise CertificateError("walk count does not match body")
            return Asteroid(vertices, walks)
        if tag == "orientation":
            if n is None:
                raise ValueError("orientation blocks need the vertex count")
            m, at = _counted(lines, 1, "arcs")
            arcs = [_row(ln) for ln in lines[at:at + m]]
            if len(arcs) != m or any(len(arc) != 2 for arc in arcs):
                raise CertificateError("arc lines do not match count")
            return Orientation.from_arcs(n, arcs)
        if tag == "bigraph-ordering":
            return _row(lines[1]), _row(lines[2])
        if tag == "ordering":
            return _row(lines[1]) if len(lines) > 1 else ()
    except IndexError:
        raise CertificateError(f"truncated {tag} block") from None
    raise CertificateError(f"unknown certificate kind {tag!r}")
