"""Brute-force ground truth and the exhaustive cross-check harness.

The oracles here deliberately share no code with the fast recognizers: they
search orderings or orientations directly and test candidate quadruples and
triples entry by entry.
"""

from __future__ import annotations

import hashlib
import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .avoidance import recognize_via_avoidance
from .certificates import extract_weak_edge_asteroid, format_certificate, search_strong_ordering
from .comparability import Orientation
from .errors import OracleGuardError
from .forcing import find_invertible_pair
from .graph_core import Bigraph, Graph, SimpleGraph, is_slash_free_ordering

MAX_ORDERING_N = 10
MAX_ORIENTATION_M = 24
MAX_BIGRAPH_PART = 6
MODES = ("pairs", "avoidance", "oracle")


def _matrix(rows: Sequence[int], width: int) -> list[list[int]]:
    return [[row >> j & 1 for j in range(width)] for row in rows]


def oracle_strong_cocomp(g: Graph) -> tuple[int, ...] | None:
    """A symmetric Slash-free ordering found by exhaustive search, or None."""
    if g.n > MAX_ORDERING_N:
        raise OracleGuardError(f"ordering oracle limited to n <= {MAX_ORDERING_N}, got {g.n}")
    n = g.n
    M = _matrix(g.rows, n)
    order: list[int] = []

    def new_slash(w: int) -> bool:
        # every quadruple with the new vertex as lower row or right column
        p = len(order)
        seq = order + [w]
        for i in range(p + 1):
            for j in range(i + 1, p + 1):
                ri, rj = M[seq[i]], M[seq[j]]
                for k in range(p + 1):
                    for l in range(k + 1, p + 1):
                        if j != p and l != p:
                            continue
                        ck, cl = seq[k], seq[l]
                        if not ri[ck] and ri[cl] and rj[ck] and not rj[cl]:
                            return True
        return False

    def extend() -> bool:
        if len(order) == n:
            return True
        for w in range(n):
            if w in order or new_slash(w):
                continue
            order.append(w)
            if extend():
                return True
            order.pop()
        return False

    return tuple(order) if extend() else None


def oracle_comparability(h: SimpleGraph) -> Orientation | None:
    """A transitive orientation by backtracking over edge directions, or None.

    Each choice is closed under transitivity (``a->b``, ``b->c`` force
    ``a->c``); a forced arc that is a non-edge or already reversed fails.
    """
    edges = h.edges()
    if len(edges) > MAX_ORIENTATION_M:
        raise OracleGuardError(
            f"orientation oracle limited to m <= {MAX_ORIENTATION_M}, got {len(edges)}"
        )
    n = h.n

    def close(arcs: set[tuple[int, int]], a: int, b: int) -> bool:
        pending = [(a, b)]
        while pending:
            x, y = pending.pop()
            if (y, x) in arcs:
                return False
            if (x, y) in arcs:
                continue
            arcs.add((x, y))
            for z in range(n):
                if (y, z) in arcs:
                    if not h.adjacent(x, z):
                        return False
                    pending.append((x, z))
                if (z, x) in arcs:
                    if not h.adjacent(z, y):
                        return False
                    pending.append((z, y))
        return True

    def solve(arcs: set[tuple[int, int]], first: bool) -> set[tuple[int, int]] | None:
        for a, b in edges:
            if (a, b) not in arcs and (b, a) not in arcs:
                break
        else:
            return arcs
        choices = [(a, b)] if first else [(a, b), (b, a)]
        for x, y in choices:
            trial = set(arcs)
            if close(trial, x, y):
                found = solve(trial, False)
                if found is not None:
                    return found
        return None

    arcs = solve(set(), True)
    if arcs is None:
        return None
    for x, y in arcs:
        for z in range(n):
            if (y, z) in arcs and (x, z) not in arcs:
                raise AssertionError("oracle produced a non-transitive orientation")
    return Orientation.from_arcs(n, arcs)


def oracle_cocomp_bigraph(h: Bigraph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """A Slash-free (row order, column order) pair by exhaustion, or None."""
    if h.nx > MAX_BIGRAPH_PART or h.ny > MAX_BIGRAPH_PART:
        raise OracleGuardError(
            f"bigraph oracle limited to parts <= {MAX_BIGRAPH_PART}, got {h.nx} x {h.ny}"
        )
    M = _matrix(h.rows, h.ny)
    for rows in itertools.permutations(range(h.nx)):
        cols: list[int] = []

        def slash_at(c: int) -> bool:
            for k in cols:
                for i, j in itertools.combinations(rows, 2):
                    if not M[i][k] and M[i][c] and M[j][k] and not M[j][c]:
                        return True
            return False

        def extend() -> bool:
            if len(cols) == h.ny:
                return True
            for c in range(h.ny):
                if c in cols or slash_at(c):
                    continue
                cols.append(c)
                if extend():
                    return True
                cols.pop()
            return False

        if extend():
            return tuple(rows), tuple(cols)
    return None


# --- cross-check harness ------------------------------------------------

def graph_from_bitmask(n: int, mask: int) -> Graph:
    """Bit ``b`` of ``mask`` is the ``b``-th pair ``(i, j)``, ``i < j``, in lexicographic order."""
    pairs = itertools.combinations(range(n), 2)
    return Graph.from_edges(n, (p for b, p in enumerate(pairs) if mask >> b & 1))


def graph_to_bitmask(g: Graph) -> int:
    mask = 0
    for b, (i, j) in enumerate(itertools.combinations(range(g.n), 2)):
        if g.adjacent(i, j):
            mask |= 1 << b
    return mask


@dataclass(frozen=True)
class Record:
    bitmask: int
    verdicts: dict[str, bool]
    certificate: str | None = None
    certified: bool = True

    @property
    def agrees(self) -> bool:
        return len(set(self.verdicts.values())) <= 1


@dataclass
class Report:
    n: int
    modes: tuple[str, ...]
    seed: int | None = None
    samples: int | None = None
    records: list[Record] = field(default_factory=list)

    @property
    def disagreements(self) -> list[Record]:
        return [r for r in self.records if not r.agrees]

    @property
    def certificate_failures(self) -> list[Record]:
        return [r for r in self.records if not r.certified]

    def strong_count(self, mode: str | None = None) -> int:
        mode = mode or self.modes[0]
        return sum(r.verdicts[mode] for r in self.records)

    def merge(self, other: Report) -> Report:
        if (self.n, self.modes) != (other.n, other.modes):
            raise ValueError("cannot merge reports of different runs")
        records = sorted(self.records + other.records, key=lambda r: r.bitmask)
        return Report(self.n, self.modes, self.seed, self.samples, records)


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def check_graph(g: Graph, modes: Sequence[str] = MODES, certify: bool = True) -> Record:
    """Run the chosen recognizers on one graph and, optionally, certify the verdict."""
    verdicts: dict[str, bool] = {}
    pair = None
    for mode in modes:
        if mode == "pairs":
            pair = find_invertible_pair(g)
            verdicts[mode] = pair is None
        elif mode == "avoidance":
            verdicts[mode] = recognize_via_avoidance(g)
        elif mode == "oracle":
            verdicts[mode] = oracle_strong_cocomp(g) is not None
        else:
            raise ValueError(f"unknown recognizer {mode!r}")
    certificate, certified = None, True
    if certify:
        if "pairs" not in modes:
            pair = find_invertible_pair(g)
        if pair is not None:
            certificate = format_certificate(extract_weak_edge_asteroid(g, pair))
        else:
            search = search_strong_ordering(g)
            if search.ordering is None or not is_slash_free_ordering(g, search.ordering):
                certified = False
            else:
                certificate = format_certificate(search.ordering)
    return Record(
        graph_to_bitmask(g),
        verdicts,
        _digest(certificate) if certificate is not None else None,
        certified,
    )


def _check_masks(args: tuple[int, Sequence[int], tuple[str, ...], bool]) -> list[Record]:
    n, masks, modes, certify = args
    return [check_graph(graph_from_bitmask(n, m), modes, certify) for m in masks]


def _chunks(items: Sequence[int], parts: int) -> list[Sequence[int]]:
    size = max(1, -(-len(items) // parts))
    return [items[i:i + size] for i in range(0, len(items), size)]


def crosscheck_enumerate(
    n: int,
    modes: Iterable[str] = MODES,
    seed: int | None = None,
    samples: int | None = None,
    certify: bool = True,
    workers: int = 1,
) -> Report:
    """Run recognizers side by side over labeled reflexive graphs on ``n`` vertices.

    With ``samples`` unset every one of the ``2^(n(n-1)/2)`` graphs is checked
    (allowed for ``n <= 6``); otherwise ``samples`` bitmasks are drawn from
    ``random.Random(seed)``.
    """
    modes = tuple(modes)
    pair_count = n * (n - 1) // 2
    if samples is None:
        if n > 6:
            raise ValueError("exhaustive enumeration is limited to n <= 6; pass samples and seed")
        masks: Sequence[int] = range(1 << pair_count)
    else:
        if seed is None:
            raise ValueError("sampled runs need a seed")
        rng = random.Random(seed)
        masks = [rng.getrandbits(pair_count) if pair_count else 0 for _ in range(samples)]

    if workers <= 1:
        records = _check_masks((n, masks, modes, certify))
    else:
        jobs = [(n, chunk, modes, certify) for chunk in _chunks(list(masks), workers * 4)]
        with ProcessPoolExecutor(workers) as pool:
            records = [r for part in pool.map(_check_masks, jobs) for r in part]
    return Report(n, modes, seed, samples, records)
