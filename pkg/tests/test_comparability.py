import itertools

import pytest
from hypothesis import given, settings

from strongcocomp.comparability import (
    Orientation,
    implication_classes,
    recognize_cocomparability,
    recognize_comparability,
    verify_transitive,
)
from strongcocomp.constructions import generate
from strongcocomp.forcing import find_invertible_pair
from strongcocomp.graph_core import SimpleGraph, complement_simple
from strongcocomp.oracle import graph_from_bitmask, oracle_comparability

from oracles import transitive_orientations
from strategies import reflexive_graphs


def simple(n, edges):
    return SimpleGraph.from_edges(n, edges)


def cycle(n):
    return simple(n, [(i, (i + 1) % n) for i in range(n)])


class TestImplicationClasses:
    def test_p3(self):
        # path a-b-c: (a, b) and (c, b) force each other
        part = implication_classes(simple(3, [(0, 1), (1, 2)]))
        assert set(part) == {((0, 1), (2, 1)), ((1, 0), (1, 2))}

    def test_triangle(self):
        part = implication_classes(cycle(3))
        assert len(part) == 6
        assert all(len(c) == 1 for c in part)

    def test_two_k2(self):
        part = implication_classes(simple(4, [(0, 1), (2, 3)]))
        assert sorted(part) == [((0, 1),), ((1, 0),), ((2, 3),), ((3, 2),)]

    def test_numbered_by_least_arc(self):
        part = implication_classes(cycle(5))
        firsts = [c[0] for c in part]
        assert firsts == sorted(firsts)
        for i, c in enumerate(part):
            assert all(part.class_of[arc] == i for arc in c)

    @given(reflexive_graphs(7))
    @settings(max_examples=150)
    def test_reversal_is_a_class(self, g):
        h = complement_simple(g)
        part = implication_classes(h)
        arcs = [(a, b) for a, b in itertools.permutations(range(h.n), 2) if h.rows[a] >> b & 1]
        assert sorted(part.class_of) == sorted(arcs)
        for c in part:
            reverse = tuple(sorted((b, a) for a, b in c))
            assert part.classes[part.class_of[reverse[0]]] == reverse

    @given(reflexive_graphs(6))
    @settings(max_examples=100)
    def test_classes_closed_under_forcing(self, g):
        h = complement_simple(g)
        part = implication_classes(h)
        adj = lambda x, y: bool(h.rows[x] >> y & 1)
        for (a, b), i in part.class_of.items():
            for c in range(h.n):
                if c not in (a, b) and adj(a, c) and not adj(b, c):
                    assert part.class_of[(a, c)] == i
                if c not in (a, b) and adj(c, b) and not adj(a, c):
                    assert part.class_of[(c, b)] == i


class TestRecognizeComparability:
    def test_c4(self):
        o = recognize_comparability(cycle(4))
        assert o is not None and verify_transitive(cycle(4), o)
        assert set(o.arcs()) in transitive_orientations(cycle(4).edges())

    def test_c5(self):
        assert recognize_comparability(cycle(5)) is None
        assert transitive_orientations(cycle(5).edges()) == []

    def test_p3(self):
        o = recognize_comparability(simple(3, [(0, 1), (1, 2)]))
        assert o.arcs() == [(0, 1), (2, 1)]

    def test_empty(self):
        o = recognize_comparability(simple(3, []))
        assert o.arcs() == []

    @pytest.mark.parametrize("n", [6, 8, 11])
    def test_bipartite_always_accepted(self, n):
        h = simple(n, [(a, b) for a in range(0, n, 2) for b in range(1, n, 2) if (a * b) % 3])
        o = recognize_comparability(h)
        assert o is not None and verify_transitive(h, o)

    def test_agrees_with_orientation_enumeration(self):
        for n in range(1, 6):
            for mask in range(1 << (n * (n - 1) // 2)):
                g = graph_from_bitmask(n, mask)
                h = SimpleGraph(n, tuple(row & ~(1 << v) for v, row in enumerate(g.rows)))
                o = recognize_comparability(h)
                brute = transitive_orientations(h.edges())
                assert (o is not None) == bool(brute)
                if o is not None:
                    assert set(o.arcs()) in brute

    @given(reflexive_graphs(7))
    @settings(max_examples=150)
    def test_agrees_with_oracle(self, g):
        h = complement_simple(g)
        o = recognize_comparability(h)
        assert (o is None) == (oracle_comparability(h) is None)
        if o is not None:
            assert verify_transitive(h, o)


class TestVerifyTransitive:
    def test_transitive_path(self):
        h = simple(3, [(0, 1), (1, 2)])
        assert verify_transitive(h, Orientation.from_arcs(3, [(0, 1), (2, 1)]))
        assert not verify_transitive(h, Orientation.from_arcs(3, [(0, 1), (1, 2)]))

    def test_triangle(self):
        h = cycle(3)
        assert verify_transitive(h, Orientation.from_arcs(3, [(0, 1), (1, 2), (0, 2)]))
        assert not verify_transitive(h, Orientation.from_arcs(3, [(0, 1), (1, 2), (2, 0)]))

    def test_wrong_edge_set(self):
        h = simple(3, [(0, 1), (1, 2)])
        with pytest.raises(ValueError):
            verify_transitive(h, Orientation.from_arcs(3, [(0, 1)]))
        with pytest.raises(ValueError):
            verify_transitive(h, Orientation.from_arcs(3, [(0, 1), (2, 1), (0, 2)]))
        with pytest.raises(ValueError):
            verify_transitive(h, Orientation.from_arcs(3, [(0, 1), (1, 0), (2, 1)]))


class TestCocomparability:
    def test_c5(self, c5):
        assert not recognize_cocomparability(c5)

    def test_k33(self, k33):
        assert recognize_cocomparability(k33)

    @pytest.mark.parametrize("n", [1, 4, 7])
    def test_complete(self, n):
        assert recognize_cocomparability(generate("complete", n=n))

    @given(reflexive_graphs(7))
    @settings(max_examples=150)
    def test_strong_implies_cocomparability(self, g):
        if find_invertible_pair(g) is None:
            assert recognize_cocomparability(g)
