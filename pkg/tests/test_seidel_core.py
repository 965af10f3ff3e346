"""Graphs, switching, Seidel matrices, and switching-class keys."""
import pytest
from hypothesis import given, settings, strategies as st

from seidel_forge.exact_linalg import IntMatrix, max_eig_le
from seidel_forge.seidel_core import (
    Graph,
    SwitchingClassKey,
    adjacency_matrix,
    all_switching_classes,
    canonical_key,
    cone,
    graph_from_packed,
    pair_index,
    seidel_of_graph,
    switch,
    switching_class_representatives,
)


@st.composite
def graphs(draw, max_n=7, min_n=0):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return Graph.from_triangle_bits(n, bits)


@st.composite
def graph_and_subsets(draw, max_n=7, subsets=1):
    G = draw(graphs(max_n=max_n))
    subs = [
        {v for v in range(G.n) if draw(st.booleans())} for _ in range(subsets)
    ]
    return (G, *subs)


class TestGraph:
    def test_validation(self):
        with pytest.raises(ValueError):
            Graph(2, (0b10 | 0b01, 0b01))  # self-loop on vertex 0
        with pytest.raises(ValueError):
            Graph(2, (0b10, 0b00))  # asymmetric
        with pytest.raises(ValueError):
            Graph(33, tuple([0] * 33))  # beyond vertex limit

    def test_constructors(self):
        assert Graph.complete(4).edges() == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        assert Graph.cycle(4).edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
        assert Graph.path(3).edges() == [(0, 1), (1, 2)]
        assert Graph.empty(3).edges() == []
        # D_{2,1}: triangle minus one matched pair = path via vertex 2
        assert Graph.complete_minus_matching(2, 1).edges() == [(0, 2), (1, 2)]
        with pytest.raises(ValueError):
            Graph.complete_minus_matching(2, 3)

    def test_accessors(self):
        G = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert G.has_edge(1, 0) and not G.has_edge(0, 2)
        assert G.degree(0) == 1 and G.neighbors(3) == {2}
        assert G.delete_vertex(0).edges() == [(1, 2)]

    @settings(max_examples=80, deadline=None)
    @given(graphs())
    def test_triangle_bits_roundtrip(self, G):
        assert Graph.from_triangle_bits(G.n, G.triangle_bits()) == G

    def test_pair_index_enumerates_upper_triangle(self):
        n = 6
        seen = [pair_index(i, j, n) for i in range(n) for j in range(i + 1, n)]
        assert seen == list(range(n * (n - 1) // 2))


class TestSeidelMatrix:
    def test_values(self):
        assert seidel_of_graph(Graph.complete(3)).rows == (
            (0, -1, -1),
            (-1, 0, -1),
            (-1, -1, 0),
        )
        assert seidel_of_graph(Graph.empty(3)).rows == ((0, 1, 1), (1, 0, 1), (1, 1, 0))

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=6))
    def test_relates_to_adjacency(self, G):
        # S = J - I - 2A entrywise
        S, A = seidel_of_graph(G), adjacency_matrix(G)
        for i in range(G.n):
            for j in range(G.n):
                expect = 0 if i == j else 1 - 2 * A[i, j]
                assert S[i, j] == expect


class TestSwitching:
    def test_example(self):
        H = switch(Graph.complete(3), {0})
        assert H.edges() == [(1, 2)]
        assert H.degree(0) == 0

    def test_rejects_bad_vertices(self):
        with pytest.raises(ValueError):
            switch(Graph.complete(3), {3})

    @settings(max_examples=80, deadline=None)
    @given(graph_and_subsets(subsets=1))
    def test_involution(self, gu):
        G, U = gu
        assert switch(switch(G, U), U) == G

    @settings(max_examples=80, deadline=None)
    @given(graph_and_subsets(subsets=2))
    def test_group_action(self, guw):
        G, U, W = guw
        assert switch(switch(G, U), W) == switch(G, U ^ W)

    @settings(max_examples=60, deadline=None)
    @given(graph_and_subsets(subsets=1))
    def test_seidel_conjugation(self, gu):
        G, U = gu
        D = IntMatrix.from_rows(
            [
                [(-1 if i == j and i in U else (1 if i == j else 0)) for j in range(G.n)]
                for i in range(G.n)
            ]
        )
        assert D.matmul(seidel_of_graph(G)).matmul(D) == seidel_of_graph(switch(G, U))

    @settings(max_examples=60, deadline=None)
    @given(graph_and_subsets(subsets=1))
    def test_eigenvalue_bound_is_invariant(self, gu):
        G, U = gu
        assert max_eig_le(seidel_of_graph(G), 3) == max_eig_le(
            seidel_of_graph(switch(G, U)), 3
        )


class TestCone:
    def test_structure(self):
        W = cone(Graph.cycle(5))
        assert W.n == 6
        assert W.degree(5) == 5
        assert all(W.degree(v) == 3 for v in range(5))

    def test_vertex_limit(self):
        cone(Graph.empty(31))
        with pytest.raises(ValueError):
            cone(Graph.empty(32))


def _closure_partition(n):
    """Independent switching-class partition: BFS closure over single-vertex
    switchings and adjacent transpositions on packed triangle bits."""
    m = n * (n - 1) // 2
    comp = {}
    for start in range(1 << m):
        if start in comp:
            continue
        comp[start] = start
        stack = [start]
        while stack:
            bits = stack.pop()
            G = Graph.from_triangle_bits(n, bits)
            nbrs = [switch(G, {v}).triangle_bits() for v in range(n)]
            for v in range(n - 1):
                p = list(range(n))
                p[v], p[v + 1] = p[v + 1], p[v]
                nbrs.append(G.relabel(p).triangle_bits())
            for b in nbrs:
                if b not in comp:
                    comp[b] = start
                    stack.append(b)
    return comp


class TestCanonicalKey:
    def test_trivial_sizes(self):
        assert canonical_key(Graph.empty(0)) == SwitchingClassKey(0, b"")
        assert canonical_key(Graph.empty(1)) == SwitchingClassKey(1, b"")
        assert canonical_key(Graph.complete(2)) == canonical_key(Graph.empty(2))

    @settings(max_examples=80, deadline=None)
    @given(graph_and_subsets(max_n=6, subsets=1))
    def test_constant_on_switching_orbit(self, gu):
        G, U = gu
        assert canonical_key(switch(G, U)) == canonical_key(G)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=6, min_n=1), st.randoms())
    def test_constant_under_relabeling(self, G, rng):
        perm = list(range(G.n))
        rng.shuffle(perm)
        assert canonical_key(G.relabel(perm)) == canonical_key(G)

    def test_matches_independent_closure(self):
        # the key is constant on each closure component and separates them
        for n in range(1, 5):
            comp = _closure_partition(n)
            key_of_comp = {}
            for bits, root in comp.items():
                key = canonical_key(Graph.from_triangle_bits(n, bits))
                assert key_of_comp.setdefault(root, key) == key
            assert len(set(key_of_comp.values())) == len(key_of_comp)

    def test_representative_counts(self):
        # switching classes on 0..5 vertices, independently derived
        assert [len(switching_class_representatives(n)) for n in range(6)] == [
            1, 1, 1, 2, 3, 7,
        ]

    def test_graph_from_packed_roundtrip(self):
        for packed in switching_class_representatives(4):
            G = graph_from_packed(4, packed)
            assert isinstance(G, Graph) and G.n == 4


class TestAllSwitchingClasses:
    def test_small_counts(self):
        assert len(all_switching_classes(3)) == 2
        assert len(all_switching_classes(4)) == 3
        keys = all_switching_classes(5)
        assert len(keys) == 7
        assert keys == sorted(keys)

    def test_size_guard(self):
        with pytest.raises(ValueError):
            all_switching_classes(8)
        with pytest.raises(ValueError):
            all_switching_classes(9, allow_large=True)


class TestSwitchingClassKey:
    def test_serialization_roundtrip(self):
        key = canonical_key(Graph.cycle(5))
        assert SwitchingClassKey.from_hex(key.hex) == key
        assert key.to_bytes()[0] == 5

    def test_ordering_by_vertex_count_first(self):
        small = canonical_key(Graph.complete(3))
        large = canonical_key(Graph.empty(4))
        assert small < large
