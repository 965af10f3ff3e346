"""Permutation groups, Weyl actions, Burnside counts, and orbit transversals."""
import json
import random

import pytest
from hypothesis import given, settings, strategies as st
from sympy.combinatorics import Permutation as SymPerm
from sympy.combinatorics import PermutationGroup as SymGroup

from seidel_forge.root_lattices import (
    LatticeSpec,
    pair_classes,
    roots,
    standard_switching_root,
)
from seidel_forge.weyl_orbits import (
    PermGroup,
    Permutation,
    SubsetCountTable,
    burnside_subset_counts,
    induced_action_on_classes,
    stabilizer_of_root,
    subset_orbit_transversal,
    transversal_jsonl_lines,
    weyl_group_on_roots,
)

E8 = LatticeSpec("E", 8)


class TestPermutation:
    def test_validation(self):
        with pytest.raises(ValueError):
            Permutation((0, 0, 1))
        with pytest.raises(ValueError):
            Permutation((0, 2))

    def test_compose_is_self_after_other(self):
        p = Permutation((1, 2, 0))
        q = Permutation((0, 2, 1))
        r = p.compose(q)
        for x in range(3):
            assert r(x) == p(q(x))

    def test_inverse_and_identity(self):
        p = Permutation((2, 0, 3, 1))
        assert p.compose(p.inverse()).is_identity()
        assert p.inverse().compose(p) == Permutation.identity(4)

    def test_cycle_type(self):
        assert Permutation((1, 0, 2, 4, 3)).cycle_type() == (1, 2, 2)
        assert Permutation.identity(3).cycle_type() == (1, 1, 1)


@st.composite
def perm_groups(draw):
    degree = draw(st.integers(1, 7))
    k = draw(st.integers(0, 3))
    gens = []
    for _ in range(k):
        images = list(range(degree))
        draw(st.randoms(use_true_random=False)).shuffle(images)
        gens.append(tuple(images))
    return degree, gens


class TestPermGroup:
    def test_rejects_bad_generators(self):
        with pytest.raises(ValueError):
            PermGroup(3, [(0, 0, 1)])
        with pytest.raises(ValueError):
            PermGroup(3, [(0, 1)])

    def test_small_orders(self):
        assert PermGroup(4, []).order() == 1
        assert PermGroup(3, [(1, 0, 2), (1, 2, 0)]).order() == 6
        assert PermGroup(4, [(1, 2, 3, 0)]).order() == 4
        klein = PermGroup(4, [(1, 0, 3, 2), (2, 3, 0, 1)])
        assert klein.order() == 4

    @settings(max_examples=100, deadline=None)
    @given(perm_groups())
    def test_order_matches_sympy(self, dg):
        degree, gens = dg
        G = PermGroup(degree, gens)
        if gens:
            ref = SymGroup([SymPerm(list(g)) for g in gens]).order()
        else:
            ref = 1
        assert G.order() == ref

    @settings(max_examples=60, deadline=None)
    @given(perm_groups(), st.randoms(use_true_random=False))
    def test_contains_products_of_generators(self, dg, rng):
        degree, gens = dg
        G = PermGroup(degree, gens)
        p = Permutation.identity(degree)
        for _ in range(rng.randrange(5)):
            if gens:
                p = p.compose(Permutation(rng.choice(gens)))
        assert G.contains(p)

    def test_contains(self):
        G = PermGroup(3, [(1, 2, 0)])
        assert G.contains(Permutation.identity(3))
        assert G.contains((1, 2, 0)) and G.contains((2, 0, 1))
        assert not G.contains((1, 0, 2))
        assert not G.contains((0, 1))  # degree mismatch

    def test_base_change_preserves_group(self):
        gens = [(1, 2, 3, 4, 0), (1, 0, 2, 3, 4)]
        G = PermGroup(5, gens)
        for prefix in [(), (3,), (4, 0), (2, 1, 0)]:
            H = PermGroup(5, gens, base_prefix=prefix)
            assert H.order() == G.order() == 120
            assert H.base[: len(prefix)] == prefix

    def test_orbit_and_transitivity(self):
        G = PermGroup(6, [(1, 0, 2, 3, 4, 5), (0, 1, 3, 2, 4, 5)])
        assert G.orbit(0) == (0, 1)
        assert G.orbit(4) == (4,)
        assert not G.is_transitive()
        assert PermGroup(4, [(1, 2, 3, 0)]).is_transitive()

    def test_random_element_is_contained_and_reproducible(self):
        G = PermGroup(5, [(1, 2, 3, 4, 0), (1, 0, 2, 3, 4)])
        seen = set()
        for seed in range(20):
            p = G.random_element(random.Random(seed))
            assert G.contains(p)
            assert p == G.random_element(random.Random(seed))
            seen.add(p.images)
        assert len(seen) > 5

    def test_stabilizer_chain_orders(self):
        G = PermGroup(3, [(1, 0, 2), (1, 2, 0)])
        orders = G.stabilizer_chain_orders()
        assert orders[0] == 6 and orders[-1] == 1
        for a, b in zip(orders, orders[1:]):
            assert a % b == 0

    def test_cycle_type_counts(self):
        # S_3: identity, three transpositions, two 3-cycles
        G = PermGroup(3, [(1, 0, 2), (1, 2, 0)])
        counts = G.cycle_type_counts()
        assert counts == {(1, 1, 1): 1, (1, 2): 3, (3,): 2}


class TestWeylGroups:
    @pytest.mark.parametrize(
        "spec,order",
        [
            (LatticeSpec("A", 1), 2),
            (LatticeSpec("A", 2), 6),
            (LatticeSpec("A", 3), 24),
            (LatticeSpec("D", 4), 192),
            (LatticeSpec("A", 7), 40320),
            (LatticeSpec("E", 8), 696729600),
        ],
    )
    def test_orders(self, spec, order):
        # |W| = (n+1)! for A_n, 2^{n-1} n! for D_n, 696729600 for E_8
        assert weyl_group_on_roots(spec).order() == order

    def test_labels_are_roots(self):
        spec = LatticeSpec("A", 2)
        assert weyl_group_on_roots(spec).labels == roots(spec)

    @pytest.mark.parametrize(
        "spec",
        [
            LatticeSpec("A", 3),
            LatticeSpec("D", 4),
            LatticeSpec("E", 6),
            LatticeSpec("E", 7),
            LatticeSpec("E", 8),
        ],
    )
    def test_orbit_stabilizer(self, spec):
        W = weyl_group_on_roots(spec)
        assert W.is_transitive()
        stab = stabilizer_of_root(W, 0)
        assert stab.order() * len(roots(spec)) == W.order()

    def test_stabilizer_fixes_its_root(self):
        W = weyl_group_on_roots(E8)
        r_index = roots(E8).index(standard_switching_root(E8))
        stab = stabilizer_of_root(W, r_index)
        assert stab.order() == 2903040
        for g in stab.generators:
            assert g(r_index) == r_index
        with pytest.raises(ValueError):
            stabilizer_of_root(W, 240)

    def test_induced_action_on_classes(self):
        r = standard_switching_root(E8)
        r_index = roots(E8).index(r)
        W = weyl_group_on_roots(E8, base_prefix=(r_index,))
        stab = stabilizer_of_root(W, r_index)
        classes = pair_classes(E8, r)
        image = induced_action_on_classes(stab, classes)
        assert image.degree == 28
        assert image.is_transitive()
        assert image.order() == 1451520
        # the kernel is {1, -1 on the fibre}: index 2
        assert stab.order() == 2 * image.order()

    def test_induced_action_requires_labels(self):
        classes = pair_classes(E8, standard_switching_root(E8))
        with pytest.raises(ValueError):
            induced_action_on_classes(PermGroup(240, []), classes)


class TestBurnside:
    def test_trivial_group(self):
        table = burnside_subset_counts(PermGroup(3, []))
        assert table.counts == (1, 3, 3, 1)
        assert table.degree == 3
        assert table[2] == 3
        assert table.to_json() == [1, 3, 3, 1]

    def test_symmetric_group(self):
        G = PermGroup(3, [(1, 0, 2), (1, 2, 0)])
        assert burnside_subset_counts(G).counts == (1, 1, 1, 1)

    def test_cyclic_group(self):
        G = PermGroup(4, [(1, 2, 3, 0)])
        assert burnside_subset_counts(G).counts == (1, 1, 2, 1, 1)

    def test_order_cap(self):
        with pytest.raises(ValueError):
            burnside_subset_counts(weyl_group_on_roots(E8))

    @settings(max_examples=40, deadline=None)
    @given(perm_groups())
    def test_matches_direct_orbit_count(self, dg):
        degree, gens = dg
        G = PermGroup(degree, gens)
        table = burnside_subset_counts(G)
        for n in range(degree + 1):
            assert table[n] == len(subset_orbit_transversal(G, n))


class TestSubsetOrbitTransversal:
    def test_trivial_group_lists_all_subsets(self):
        from itertools import combinations

        G = PermGroup(4, [])
        assert subset_orbit_transversal(G, 2) == list(combinations(range(4), 2))

    def test_size_zero(self):
        assert subset_orbit_transversal(PermGroup(5, []), 0) == [()]

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            subset_orbit_transversal(PermGroup(4, []), 5)

    def test_scan_cap_mentions_complement(self):
        cyc28 = PermGroup(28, [tuple((i + 1) % 28 for i in range(28))])
        with pytest.raises(ValueError) as err:
            subset_orbit_transversal(cyc28, 9)
        assert "complement" in str(err.value)

    def test_representatives_are_orbit_minima(self):
        G = weyl_group_on_roots(LatticeSpec("A", 3))
        reps = subset_orbit_transversal(G, 3)
        rng = random.Random(99)
        checks = 0
        while checks < 1000:
            for rep in reps:
                g = G.random_element(rng)
                image = tuple(sorted(g(x) for x in rep))
                assert rep <= image
                checks += 1

    def test_counts_match_burnside_for_weyl_a3(self):
        G = weyl_group_on_roots(LatticeSpec("A", 3))
        table = burnside_subset_counts(G)
        for n in range(G.degree + 1):
            assert len(subset_orbit_transversal(G, n)) == table[n]


class TestJsonl:
    def test_lines_parse(self):
        lines = transversal_jsonl_lines(2, [(0, 1), (0, 2)])
        assert [json.loads(s) for s in lines] == [
            {"n": 2, "subset": [0, 1]},
            {"n": 2, "subset": [0, 2]},
        ]


class TestSubsetCountTable:
    def test_surface(self):
        t = SubsetCountTable((1, 2, 1))
        assert t.degree == 2 and t[1] == 2 and t.to_json() == [1, 2, 1]
