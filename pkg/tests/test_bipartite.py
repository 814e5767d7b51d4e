import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from adfactor.bipartite import (
    BipartiteInstance,
    Equipartition,
    build_bipartite,
    chvatal_condition_holds,
    find_deficient_set,
    has_hamilton_cycle,
    has_two_factor,
    neighborhood_multiset,
    parse_bipartite_instance,
    serialize_bipartite_instance,
    two_factor_degree_condition_mod0,
    two_factor_degree_condition_mod2,
)
from adfactor.generators import complete_digraph, random_bipartite, split_complete_digraph
from adfactor.graphs import Digraph


def instance_from_pairs(m, pairs):
    part = Equipartition.from_source_set(2 * m, range(m))
    return BipartiteInstance(part, frozenset((x, m + y) for x, y in pairs))


def complete_instance(m):
    return instance_from_pairs(m, [(x, y) for x in range(m) for y in range(m)])


def multiset_size_bruteforce(g, U):
    total = 0
    for v in sorted(g.partition.Y if set(U) <= g.partition.X else g.partition.X):
        cnt = sum(
            1
            for x, y in g.edges
            if (x in U and y == v) or (y in U and x == v)
        )
        total += min(2, cnt)
    return total


class TestEquipartition:
    def test_valid(self):
        p = Equipartition(frozenset({0, 1}), frozenset({2, 3}))
        assert p.n == 4

    def test_invalid(self):
        with pytest.raises(ValueError):
            Equipartition(frozenset({0}), frozenset({0, 1}))
        with pytest.raises(ValueError):
            Equipartition(frozenset({0, 1}), frozenset({2}))
        with pytest.raises(ValueError):
            Equipartition(frozenset({0, 1}), frozenset({3, 4}))


class TestBuildBipartite:
    def test_only_forward_arcs_survive(self):
        d = Digraph(2, [(0, 1), (1, 0)])
        g = build_bipartite(d, Equipartition.from_source_set(2, [0]))
        assert g.edges == {(0, 1)}

    def test_complete_four(self):
        d = complete_digraph(4)
        g = build_bipartite(d, Equipartition.from_source_set(4, [0, 1]))
        assert len(g.edges) == 4

    def test_split_halves_have_no_crossing(self):
        d = split_complete_digraph(6)
        g = build_bipartite(d, Equipartition.from_source_set(6, [0, 1, 2]))
        # no arc crosses between the halves, verified by direct enumeration
        assert not any(u < 3 <= v for u, v in d.arcs)
        assert g.edges == frozenset()

    def test_partition_must_match(self):
        d = complete_digraph(4)
        with pytest.raises(ValueError):
            build_bipartite(d, Equipartition.from_source_set(6, [0, 1, 2]))

    def test_roundtrip_serialization(self):
        rng = random.Random(5)
        for trial in range(25):
            g = random_bipartite(rng.randint(1, 6), rng.random(), trial)
            assert parse_bipartite_instance(serialize_bipartite_instance(g)) == g


class TestNeighborhoodMultiset:
    def test_empty(self):
        g = complete_instance(3)
        size, counts = neighborhood_multiset(g, [])
        assert size == 0 and not counts

    def test_single_pendant(self):
        g = instance_from_pairs(2, [(0, 0)])
        size, counts = neighborhood_multiset(g, [0])
        assert size == 1 and counts == {2: 1}

    def test_shared_neighbor_counted_twice(self):
        g = instance_from_pairs(2, [(0, 0), (1, 0)])
        size, counts = neighborhood_multiset(g, [0, 1])
        assert size == 2 and counts == {2: 2}

    def test_cap_at_two(self):
        g = instance_from_pairs(3, [(0, 0), (1, 0), (2, 0)])
        size, _ = neighborhood_multiset(g, [0, 1, 2])
        assert size == 2

    def test_y_side(self):
        g = instance_from_pairs(2, [(0, 0), (0, 1), (1, 1)])
        size, counts = neighborhood_multiset(g, [2, 3])
        assert size == 3 and counts == {0: 2, 1: 1}

    def test_straddling_rejected(self):
        g = complete_instance(2)
        with pytest.raises(ValueError):
            neighborhood_multiset(g, [0, 2])

    @given(st.integers(1, 5), st.data())
    def test_matches_bruteforce(self, m, data):
        pairs = [(x, y) for x in range(m) for y in range(m)]
        edges = data.draw(st.sets(st.sampled_from(pairs)))
        g = instance_from_pairs(m, edges)
        U = data.draw(st.sets(st.sampled_from(range(m))))
        size, counts = neighborhood_multiset(g, U)
        assert size == multiset_size_bruteforce(g, U)
        assert size == sum(counts.values())
        assert all(c in (1, 2) for c in counts.values())


class TestTwoFactor:
    def test_complete_3_3(self):
        cover = has_two_factor(complete_instance(3))
        assert cover is not None
        assert sorted(len(c) for c in cover.cycles) == [6]

    def test_c8_returns_itself(self):
        g = instance_from_pairs(4, [(i, i) for i in range(4)] + [(i, (i + 1) % 4) for i in range(4)])
        cover = has_two_factor(g)
        assert cover is not None
        assert len(cover.cycles) == 1 and len(cover.cycles[0]) == 8

    def test_degree_one_vertex_blocks(self):
        g = instance_from_pairs(3, [(0, 0), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)])
        assert has_two_factor(g) is None

    def test_cycles_are_even_and_spanning(self):
        rng = random.Random(11)
        seen_multi_cycle = False
        for trial in range(200):
            m = rng.randint(2, 7)
            g = random_bipartite(m, rng.uniform(0.4, 1.0), f"tf:{trial}")
            cover = has_two_factor(g)
            if cover is None:
                continue
            verts = [v for c in cover.cycles for v in c]
            assert sorted(verts) == list(range(2 * m))
            for c in cover.cycles:
                assert len(c) % 2 == 0 and len(c) >= 4
            if len(cover.cycles) > 1:
                seen_multi_cycle = True
        assert seen_multi_cycle


class TestOreEquivalence:
    def test_deficient_pendant(self):
        g = instance_from_pairs(2, [(0, 0), (1, 0), (1, 1)])
        w = find_deficient_set(g)
        assert w is not None
        assert w.vertices == {0} and w.multiset_size == 1

    def test_complete_has_none(self):
        assert find_deficient_set(complete_instance(3)) is None

    def test_witness_iff_no_factor_on_random_instances(self):
        rng = random.Random(606)
        mismatches = 0
        lacking = 0
        for trial in range(1000):
            m = 6
            g = random_bipartite(m, rng.uniform(0.25, 0.6), f"ore:{trial}")
            factor = has_two_factor(g)
            witness = find_deficient_set(g, "exhaustive")
            if (factor is None) != (witness is not None):
                mismatches += 1
            if factor is None:
                lacking += 1
                size, _ = neighborhood_multiset(g, witness.vertices)
                assert size == witness.multiset_size
                assert size < 2 * len(witness.vertices)
        assert mismatches == 0
        assert lacking > 100  # corpus exercises both outcomes

    def test_minimal_mode_yields_inclusion_minimal(self):
        rng = random.Random(7117)
        found = 0
        for trial in range(400):
            m = rng.randint(3, 7)
            g = random_bipartite(m, rng.uniform(0.2, 0.5), f"min:{trial}")
            w = find_deficient_set(g, "minimal")
            if w is None:
                assert has_two_factor(g) is not None
                continue
            found += 1
            size, _ = neighborhood_multiset(g, w.vertices)
            assert size == w.multiset_size < 2 * len(w.vertices)
            # no proper subset is deficient
            for r in range(1, len(w.vertices)):
                for sub in combinations(sorted(w.vertices), r):
                    ssize, _ = neighborhood_multiset(g, sub)
                    assert ssize >= 2 * r, (sorted(g.edges), sorted(w.vertices), sub)
        assert found > 50

    def test_witness_iff_no_factor_up_to_twelve(self):
        rng = random.Random(1313)
        lacking = 0
        for trial in range(120):
            m = rng.randint(9, 12)
            g = random_bipartite(m, rng.uniform(0.2, 0.45), f"ore12:{trial}")
            factor = has_two_factor(g)
            witness = find_deficient_set(g, "exhaustive")
            assert (factor is None) == (witness is not None)
            lacking += factor is None
        assert lacking > 20

    def test_exhaustive_guard(self):
        g = complete_instance(21)
        with pytest.raises(ValueError):
            find_deficient_set(g, "exhaustive")


class TestHamilton:
    def test_complete_2_2(self):
        res = has_hamilton_cycle(complete_instance(2))
        assert res.status == "yes"
        assert sorted(res.cycle) == [0, 1, 2, 3]

    def test_degree_one(self):
        g = instance_from_pairs(2, [(0, 0), (1, 0), (1, 1)])
        assert has_hamilton_cycle(g).status == "no"

    def test_c8(self):
        g = instance_from_pairs(4, [(i, i) for i in range(4)] + [(i, (i + 1) % 4) for i in range(4)])
        res = has_hamilton_cycle(g)
        assert res.status == "yes"
        assert len(res.cycle) == 8
        assert set(res.cycle) == set(range(8))

    def test_budget_yields_unknown(self):
        res = has_hamilton_cycle(complete_instance(6), node_budget=2)
        assert res.status == "unknown"
        assert res.cycle is None

    def test_agrees_with_two_factor_necessity(self):
        # a Hamilton cycle is itself a 2-factor
        rng = random.Random(31)
        for trial in range(150):
            m = rng.randint(2, 6)
            g = random_bipartite(m, rng.uniform(0.3, 0.9), f"ham:{trial}")
            if has_hamilton_cycle(g).status == "yes":
                assert has_two_factor(g) is not None


class TestDegreeConditions:
    def test_chvatal_all_half(self):
        n = 8
        assert chvatal_condition_holds([4] * 8, n) is False

    def test_chvatal_pendant(self):
        # degree-1 vertex plus max degree n/2 - 1 trips i = 1
        n = 8
        seq = sorted([1, 3, 3, 3, 3, 3, 3, 3])
        assert chvatal_condition_holds(seq, n) is True

    def test_chvatal_requires_sorted_and_even(self):
        with pytest.raises(ValueError):
            chvatal_condition_holds([3, 1, 2, 2], 4)
        with pytest.raises(ValueError):
            chvatal_condition_holds([1, 2, 3], 3)
        with pytest.raises(ValueError):
            chvatal_condition_holds([1, 2, 3], 4)

    def test_chvatal_necessary_for_non_hamiltonian(self):
        # exact Hamilton decision as the oracle
        rng = random.Random(808)
        negatives = 0
        for trial in range(500):
            m = rng.randint(2, 8)
            g = random_bipartite(m, rng.uniform(0.2, 0.8), f"chv:{trial}")
            res = has_hamilton_cycle(g)
            if res.status != "no":
                continue
            negatives += 1
            assert chvatal_condition_holds(g.degree_sequence(), 2 * m)
        assert negatives > 100

    def test_mod0_two_small_degrees(self):
        n = 12
        seq = sorted([0, 1] + [6] * 10)
        assert two_factor_degree_condition_mod0(seq, n) is True

    def test_mod0_all_half_false(self):
        assert two_factor_degree_condition_mod0([6] * 12, 12) is False

    def test_mod0_parity_guard(self):
        with pytest.raises(ValueError):
            two_factor_degree_condition_mod0([3] * 14, 14)
        with pytest.raises(ValueError):
            two_factor_degree_condition_mod0([2] * 8, 8)

    def test_mod2_parity_guard(self):
        with pytest.raises(ValueError):
            two_factor_degree_condition_mod2([3] * 12, 12)
        with pytest.raises(ValueError):
            two_factor_degree_condition_mod2([2] * 10, 10)

    def test_mod2_all_half_false(self):
        assert two_factor_degree_condition_mod2([7] * 14, 14) is False

    def test_conditions_necessary_for_factor_free(self):
        # has_two_factor is the oracle; every factor-free instance of the
        # right parity must satisfy the matching condition
        rng = random.Random(909)
        hits = {12: 0, 14: 0, 16: 0}
        for trial in range(400):
            n = rng.choice([12, 14, 16])
            m = n // 2
            g = random_bipartite(m, rng.uniform(0.25, 0.55), f"nc:{trial}")
            if has_two_factor(g) is not None:
                continue
            hits[n] += 1
            seq = g.degree_sequence()
            if n % 4 == 0:
                assert two_factor_degree_condition_mod0(seq, n)
            else:
                assert two_factor_degree_condition_mod2(seq, n)
        assert all(v > 10 for v in hits.values())


class TestLemmaInvariants:
    """Structural facts about inclusion-minimal deficient sets."""

    @staticmethod
    def minimal_witnesses(g):
        w = find_deficient_set(g, "exhaustive")
        return [] if w is None else [w]

    def corpus(self):
        rng = random.Random(1212)
        for trial in range(600):
            m = rng.randint(3, 7)
            yield random_bipartite(m, rng.uniform(0.2, 0.55), f"lem:{trial}")

    def test_lemma_suite(self):
        checked = 0
        for g in self.corpus():
            for w in self.minimal_witnesses(g):
                checked += 1
                U = w.vertices
                k = len(U)
                size, counts = neighborhood_multiset(g, U)
                # bounds forced by minimality
                assert 2 * k - 2 <= size <= 2 * k - 1
                # single-multiplicity neighbors: no member sees two of them
                M = {v for v, c in counts.items() if c == 1}
                for u in U:
                    assert sum(1 for x, y in g.edges if x == u and y in M) <= 1
                # degrees: all at most k, and k-1 of them at most k-1
                degs = sorted(g.degree_of(u) for u in U)
                assert degs[-1] <= k
                assert sum(1 for dg in degs if dg <= k - 1) >= k - 1
                # mirrored deficient set on the other side
                Y = g.partition.Y
                y0 = {y for y in Y if not any(x in U for x, yy in g.edges if yy == y)}
                y1 = {v for v, c in counts.items() if c == 1}
                ustar = y0 | y1
                ssize, _ = neighborhood_multiset(g, ustar)
                assert ssize < 2 * len(ustar)
        assert checked > 150
