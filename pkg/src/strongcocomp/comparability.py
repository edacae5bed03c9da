"""Comparability graph recognition by implication classes.

Arc ``(a, b)`` forces ``(a, c)`` when ``bc`` is a non-edge and forces
``(c, b)`` when ``ac`` is a non-edge; the closure of an arc under this
relation is its implication class. :func:`recognize_comparability` runs the
classical decomposition: orient the class of the least remaining edge, fail
if that class holds some edge in both directions, delete the class and its
reversal, repeat. Closures are computed on bit-set rows, touching each arc
once.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InternalError
from .graph_core import Graph, SimpleGraph, complement_simple, iter_bits

Arc = tuple[int, int]


@dataclass(frozen=True)
class Orientation:
    """One direction per edge: ``out[x]`` is the bit set of heads of arcs leaving ``x``."""

    n: int
    out: tuple[int, ...]

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Arc]) -> Orientation:
        out = [0] * n
        for a, b in arcs:
            out[a] |= 1 << b
        return cls(n, tuple(out))

    def arcs(self) -> list[Arc]:
        return [(a, b) for a in range(self.n) for b in iter_bits(self.out[a])]

    def has_arc(self, a: int, b: int) -> bool:
        return bool(self.out[a] >> b & 1)


@dataclass(frozen=True)
class ImplicationPartition:
    classes: tuple[tuple[Arc, ...], ...]
    class_of: dict[Arc, int]

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[tuple[Arc, ...]]:
        return iter(self.classes)


def _implication_class(rows: list[int] | tuple[int, ...], a: int, b: int) -> tuple[dict[int, int], bool]:
    """Closure of arc ``(a, b)`` in the graph given by ``rows``.

    Returns the class as a map tail -> bit set of heads, and whether the class
    contains some arc together with its reversal.
    """
    out: dict[int, int] = defaultdict(int)
    into: dict[int, int] = defaultdict(int)
    out[a] = 1 << b
    into[b] = 1 << a
    stack = [(a, b)]
    conflict = False
    while stack:
        x, y = stack.pop()
        rx, ry = rows[x], rows[y]
        # (x, y) -> (x, c) for c adjacent to x but not to y
        new = rx & ~ry & ~(1 << y) & ~out[x]
        if new:
            if new & into[x]:
                conflict = True
            out[x] |= new
            for c in iter_bits(new):
                into[c] |= 1 << x
                stack.append((x, c))
        # (x, y) -> (c, y) for c adjacent to y but not to x
        new = ry & ~rx & ~(1 << x) & ~into[y]
        if new:
            if new & out[y]:
                conflict = True
            into[y] |= new
            for c in iter_bits(new):
                out[c] |= 1 << y
                stack.append((c, y))
    return {x: m for x, m in out.items() if m}, conflict


def implication_classes(h: SimpleGraph) -> ImplicationPartition:
    """Partition of all ``2m`` arcs of ``h``, numbered by least contained arc."""
    classes: list[tuple[Arc, ...]] = []
    class_of: dict[Arc, int] = {}
    for a in range(h.n):
        for b in iter_bits(h.rows[a]):
            if (a, b) in class_of:
                continue
            members, _ = _implication_class(h.rows, a, b)
            arcs = tuple(sorted((x, c) for x, m in members.items() for c in iter_bits(m)))
            for arc in arcs:
                class_of[arc] = len(classes)
            classes.append(arcs)
    return ImplicationPartition(tuple(classes), class_of)


def verify_transitive(h: SimpleGraph, o: Orientation) -> bool:
    """Whether ``o`` is a transitive orientation of ``h``.

    Raises ``ValueError`` if ``o`` does not orient exactly the edges of ``h``.
    """
    if o.n != h.n:
        raise ValueError("orientation and graph differ in vertex count")
    into = [0] * h.n
    for a in range(h.n):
        for b in iter_bits(o.out[a]):
            into[b] |= 1 << a
    for x in range(h.n):
        if o.out[x] & into[x] or o.out[x] | into[x] != h.rows[x]:
            raise ValueError(f"orientation does not orient exactly the edges at vertex {x}")
    for x in range(h.n):
        for y in iter_bits(o.out[x]):
            if o.out[y] & ~o.out[x]:
                return False
    return True


def recognize_comparability(h: SimpleGraph) -> Orientation | None:
    """A verified transitive orientation of ``h``, or None if there is none."""
    rows = list(h.rows)
    out = [0] * h.n
    for a in range(h.n):
        while rows[a] >> (a + 1):
            higher = rows[a] >> (a + 1) << (a + 1)
            b = (higher & -higher).bit_length() - 1
            members, conflict = _implication_class(rows, a, b)
            if conflict:
                return None
            for x, heads in members.items():
                out[x] |= heads
                rows[x] &= ~heads
                for c in iter_bits(heads):
                    rows[c] &= ~(1 << x)
    orientation = Orientation(h.n, tuple(out))
    if not verify_transitive(h, orientation):
        raise InternalError("class decomposition produced a non-transitive orientation")
    return orientation


def recognize_cocomparability(g: Graph) -> bool:
    return recognize_comparability(complement_simple(g)) is not None
