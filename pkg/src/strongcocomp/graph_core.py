"""Graph representations, vertex orderings, Slash checks and the text format.

Adjacency is stored as one Python ``int`` per vertex, used as a bit set over
vertex indices. A reflexive :class:`Graph` always has bit ``v`` set in row
``v``; a :class:`SimpleGraph` never does.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import GraphFormatError

EdgeRef = tuple[int, int]
PairNode = tuple[int, int]
VertexOrdering = tuple[int, ...]

# rows 01 / 10
SLASH = ((0, 1), (1, 0))


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indices of set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bits_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def edge_ref(x: int, y: int) -> EdgeRef:
    """Canonical (min, max) form of the edge ``xy``; ``x == y`` is a loop."""
    return (x, y) if x <= y else (y, x)


def check_permutation(perm: Sequence[int], n: int) -> VertexOrdering:
    perm = tuple(perm)
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {perm!r}")
    return perm


def _symmetric_rows(n: int, edges: Iterable[tuple[int, int]], loops: bool) -> list[int]:
    rows = [(1 << v) if loops else 0 for v in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return rows


@dataclass(frozen=True)
class Graph:
    """Finite reflexive graph on vertices ``0..n-1``.

    ``rows[v]`` is the closed neighbourhood of ``v`` (it always contains ``v``).
    """

    n: int
    rows: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise ValueError("row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{self.n - 1}")
            if not row >> v & 1:
                raise ValueError(f"vertex {v} lacks its loop")
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = (), labels=None) -> Graph:
        return cls(n, tuple(_symmetric_rows(n, edges, loops=True)), labels)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> Graph:
        n = len(matrix)
        return cls(n, tuple(bits_of(j for j in range(n) if matrix[i][j]) for i in range(n)))

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[EdgeRef]:
        """Non-loop edges in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return len(self.edges())

    def matrix(self) -> list[list[int]]:
        return [[self.rows[i] >> j & 1 for j in range(self.n)] for i in range(self.n)]

    def permuted(self, order: Sequence[int]) -> Graph:
        """The graph whose vertex ``i`` is vertex ``order[i]`` of this graph."""
        order = check_permutation(order, self.n)
        pos = {v: i for i, v in enumerate(order)}
        return Graph.from_edges(self.n, ((pos[u], pos[v]) for u, v in self.edges()))

    def induced(self, vertices: Sequence[int]) -> Graph:
        idx = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            ((idx[u], idx[v]) for u, v in self.edges() if u in idx and v in idx),
        )


@dataclass(frozen=True)
class SimpleGraph:
    """Finite loopless graph; houses the avoidance graph and comparability inputs."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise ValueError("row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at {v} in a simple graph")
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> SimpleGraph:
        edges = list(edges)
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u} in a simple graph")
        return cls(n, tuple(_symmetric_rows(n, edges, loops=False)))

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[EdgeRef]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2


@dataclass(frozen=True)
class Bigraph:
    """Bipartite graph with parts ``X = 0..nx-1`` and ``Y = 0..ny-1``.

    ``rows[x]`` is the bit set of ``Y``-neighbours of ``x``.
    """

    nx: int
    ny: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.nx:
            raise ValueError("row count does not match nx")
        full = (1 << self.ny) - 1
        if any(row & ~full for row in self.rows):
            raise ValueError(f"biadjacency has columns outside 0..{self.ny - 1}")

    @classmethod
    def from_edges(cls, nx: int, ny: int, edges: Iterable[tuple[int, int]] = ()) -> Bigraph:
        rows = [0] * nx
        for x, y in edges:
            if not (0 <= x < nx and 0 <= y < ny):
                raise ValueError(f"bigraph edge ({x}, {y}) outside {nx} x {ny}")
            rows[x] |= 1 << y
        return cls(nx, ny, tuple(rows))

    @classmethod
    def from_matrix(cls, biadj: Sequence[Sequence[int]], ny: int | None = None) -> Bigraph:
        nx = len(biadj)
        if ny is None:
            ny = len(biadj[0]) if nx else 0
        return cls(nx, ny, tuple(bits_of(j for j in range(ny) if row[j]) for row in biadj))

    def adjacent(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.nx) for y in iter_bits(self.rows[x])]

    def matrix(self) -> list[list[int]]:
        return [[self.rows[x] >> y & 1 for y in range(self.ny)] for x in range(self.nx)]


def complement_simple(g: Graph) -> SimpleGraph:
    """Complement of the loopless graph underlying ``g``."""
    full = (1 << g.n) - 1
    return SimpleGraph(g.n, tuple(full & ~row for row in g.rows))


def _positional_rows(rows: Sequence[int], row_order: Sequence[int], col_order: Sequence[int]) -> list[int]:
    col_pos = {c: k for k, c in enumerate(col_order)}
    out = []
    for r in row_order:
        out.append(bits_of(col_pos[c] for c in iter_bits(rows[r])))
    return out


def _has_slash(prows: Sequence[int], width: int) -> bool:
    # rows i < j contain a Slash iff some column where (i, j) reads (0, 1)
    # lies left of some column where it reads (1, 0)
    full = (1 << width) - 1
    for j in range(1, len(prows)):
        rj = prows[j]
        for i in range(j):
            ri = prows[i]
            zero_one = ~ri & rj & full
            if not zero_one:
                continue
            one_zero = ri & ~rj
            if one_zero and (zero_one & -zero_one).bit_length() < one_zero.bit_length():
                return True
    return False


def is_slash_free_ordering(g: Graph, order: Sequence[int]) -> bool:
    """Whether the symmetric ordering of ``g``'s adjacency matrix avoids Slash."""
    order = check_permutation(order, g.n)
    return not _has_slash(_positional_rows(g.rows, order, order), g.n)


def is_bigraph_slash_free(h: Bigraph, row_order: Sequence[int], col_order: Sequence[int]) -> bool:
    row_order = check_permutation(row_order, h.nx)
    col_order = check_permutation(col_order, h.ny)
    return not _has_slash(_positional_rows(h.rows, row_order, col_order), h.ny)


# --- text format ---------------------------------------------------------

def _content_lines(text: str) -> list[list[str]]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append(line.split())
    return out


def _ints(tokens: list[str], count: int, what: str) -> list[int]:
    if len(tokens) != count:
        raise GraphFormatError(f"{what}: expected {count} integers, got {' '.join(tokens)!r}")
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"{what}: non-integer token in {' '.join(tokens)!r}") from None
    if any(v < 0 for v in values):
        raise GraphFormatError(f"{what}: negative value in {' '.join(tokens)!r}")
    return values


def decode_graph(text: str, kind: str = "reflexive") -> Graph | SimpleGraph | Bigraph:
    """Parse the edge-list text format into a graph of the given kind.

    ``kind`` is one of ``"reflexive"``, ``"simple"`` or ``"bigraph"``.
    """
    if kind not in ("reflexive", "simple", "bigraph"):
        raise ValueError(f"unknown graph kind {kind!r}")
    lines = _content_lines(text)
    if not lines:
        raise GraphFormatError("missing header line")
    if kind == "bigraph":
        nx, ny, m = _ints(lines[0], 3, "header")
    else:
        n, m = _ints(lines[0], 2, "header")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges but {len(body)} edge lines follow")
    edges = [tuple(_ints(tokens, 2, f"edge line {i + 1}")) for i, tokens in enumerate(body)]

    if kind == "bigraph":
        for x, y in edges:
            if x >= nx or y >= ny:
                raise GraphFormatError(f"bigraph edge ({x}, {y}) outside parts {nx} x {ny}")
        return Bigraph.from_edges(nx, ny, edges)
    for u, v in edges:
        if u >= n or v >= n:
            raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
    if kind == "simple":
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"loop {u} {v} forbidden in a simple graph")
        return SimpleGraph.from_edges(n, edges)
    return Graph.from_edges(n, ((u, v) for u, v in edges if u != v))


def encode_graph(g: Graph | SimpleGraph | Bigraph) -> str:
    """Canonical text: sorted edges, loops omitted for reflexive graphs."""
    edges = g.edges()
    if isinstance(g, Bigraph):
        header = f"{g.nx} {g.ny} {len(edges)}"
    else:
        header = f"{g.n} {len(edges)}"
    return "\n".join([header, *(f"{a} {b}" for a, b in edges)]) + "\n"
