import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from adfactor.graphs import (
    CycleCover,
    Digraph,
    GraphFormatError,
    SimpleGraph,
    min_degree,
    parse_digraph,
    parse_simple_graph,
    serialize_digraph,
    serialize_simple_graph,
    validate_anti_directed_cover,
)
from adfactor.generators import complete_digraph, split_complete_digraph


class TestParsing:
    def test_basic_digraph(self):
        d = parse_digraph("4\n0 1\n1 0")
        assert d.n == 4
        assert d.arcs == {(0, 1), (1, 0)}

    def test_comments_and_blanks(self):
        d = parse_digraph("# header\n\n3\n# arc below\n0 1\n")
        assert d.n == 3
        assert d.arcs == {(0, 1)}

    def test_self_loop_reports_line(self):
        with pytest.raises(GraphFormatError) as exc:
            parse_digraph("2\n0 0")
        assert exc.value.line == 2
        assert "self-loop" in str(exc.value)

    def test_duplicate_arc_reports_line(self):
        with pytest.raises(GraphFormatError) as exc:
            parse_digraph("3\n0 1\n0 1")
        assert exc.value.line == 3
        assert "duplicate" in str(exc.value)

    def test_opposite_arcs_are_not_duplicates(self):
        d = parse_digraph("3\n0 1\n1 0")
        assert len(d.arcs) == 2

    def test_out_of_range_endpoint(self):
        with pytest.raises(GraphFormatError) as exc:
            parse_digraph("2\n0 5")
        assert exc.value.line == 2

    def test_malformed_line(self):
        with pytest.raises(GraphFormatError):
            parse_digraph("2\n0 1 2")
        with pytest.raises(GraphFormatError):
            parse_digraph("2\na b")

    def test_empty_input(self):
        with pytest.raises(GraphFormatError):
            parse_digraph("")

    def test_simple_graph_requires_sorted_endpoints(self):
        g = parse_simple_graph("3\n0 1\n1 2")
        assert g.edges == {(0, 1), (1, 2)}
        with pytest.raises(GraphFormatError):
            parse_simple_graph("3\n1 0")

    @given(st.integers(2, 9), st.data())
    def test_roundtrip_digraph(self, n, data):
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
        arcs = data.draw(st.sets(st.sampled_from(pairs)))
        d = Digraph(n, arcs)
        assert parse_digraph(serialize_digraph(d)) == d

    @given(st.integers(2, 9), st.data())
    def test_roundtrip_simple(self, n, data):
        pairs = [(u, v) for u in range(n) for v in range(n) if u < v]
        edges = data.draw(st.sets(st.sampled_from(pairs)))
        g = SimpleGraph(n, edges)
        assert parse_simple_graph(serialize_simple_graph(g)) == g


class TestDegrees:
    def test_complete_digraph(self):
        assert min_degree(complete_digraph(4)) == 3

    def test_isolated_vertex(self):
        assert min_degree(Digraph(3, [(0, 1), (1, 0)])) == 0

    def test_split_complete(self):
        # two complete halves: min degree n/2 - 1
        assert min_degree(split_complete_digraph(6)) == 2

    def test_out_in_asymmetry(self):
        d = Digraph(3, [(0, 1), (0, 2), (1, 0)])
        assert d.out_degree(0) == 2
        assert d.in_degree(0) == 1
        assert min_degree(d) == 0  # vertex 2 has outdegree 0


class TestCoverValidation:
    def test_alternating_cover_on_complete(self):
        d = complete_digraph(4)
        cover = CycleCover(((0, 1, 2, 3),), ((True, False, True, False),))
        assert validate_anti_directed_cover(d, cover)

    def test_directed_cycle_rejected(self):
        d = complete_digraph(4)
        cover = CycleCover(((0, 1, 2, 3),), ((True, True, True, True),))
        check = validate_anti_directed_cover(d, cover)
        assert not check
        assert "directed path" in check.reason

    def test_sparse_arcs_exact_orientations(self):
        # Only the four alternating arcs exist; enumerate all 16 orientation
        # assignments and compare the validator against a direct tally.
        d = Digraph(4, [(0, 1), (2, 1), (2, 3), (0, 3)])
        cycle = (0, 1, 2, 3)
        accepted = []
        for flags in product([True, False], repeat=4):
            arcs_ok = all(
                d.has_arc(cycle[i], cycle[(i + 1) % 4])
                if flags[i]
                else d.has_arc(cycle[(i + 1) % 4], cycle[i])
                for i in range(4)
            )
            alternation_ok = all(flags[i] != flags[(i + 1) % 4] for i in range(4))
            expected = arcs_ok and alternation_ok
            got = bool(
                validate_anti_directed_cover(d, CycleCover((cycle,), (flags,)))
            )
            assert got == expected
            if got:
                accepted.append(flags)
        assert accepted == [(True, False, True, False)]

    def test_unoriented_cover_searches_both_alternations(self):
        d = Digraph(4, [(0, 1), (2, 1), (2, 3), (0, 3)])
        assert validate_anti_directed_cover(d, CycleCover(((0, 1, 2, 3),)))
        # reversing every arc flips which alternation works
        rev = Digraph(4, [(v, u) for u, v in d.arcs])
        assert validate_anti_directed_cover(rev, CycleCover(((0, 1, 2, 3),)))

    def test_non_spanning_rejected(self):
        d = complete_digraph(6)
        check = validate_anti_directed_cover(
            d, CycleCover(((0, 1, 2, 3),), ((True, False, True, False),))
        )
        assert not check and "span" in check.reason

    def test_repeated_vertex_rejected(self):
        d = complete_digraph(4)
        check = validate_anti_directed_cover(
            d, CycleCover(((0, 1, 0, 2),), ((True, False, True, False),))
        )
        assert not check

    def test_short_and_odd_cycles_rejected(self):
        d = complete_digraph(6)
        two_plus_four = CycleCover(((0, 1), (2, 3, 4, 5)))
        assert not validate_anti_directed_cover(d, two_plus_four)
        odd = CycleCover(((0, 1, 2), (3, 4, 5)))
        assert not validate_anti_directed_cover(d, odd)

    def test_odd_order_never_validates(self):
        # spanning even cycles cannot cover an odd number of vertices
        rng = random.Random(7)
        for n in (5, 7, 9):
            d = complete_digraph(n)
            for _ in range(20):
                verts = list(range(n))
                rng.shuffle(verts)
                cut = rng.randrange(0, n, 2)
                cover = CycleCover((tuple(verts[:cut]), tuple(verts[cut:])))
                assert not validate_anti_directed_cover(d, cover)

    def test_orientation_shape_mismatch(self):
        with pytest.raises(ValueError):
            CycleCover(((0, 1, 2, 3),), ((True, False),))

    @given(st.integers(2, 4))
    def test_alternation_matches_in_out_tally(self, m):
        # A cover validates iff at every vertex the two incident cover arcs
        # both enter or both leave, tallied independently here.
        d = complete_digraph(2 * m)
        cycle = tuple(range(2 * m))
        rng = random.Random(m)
        for _ in range(30):
            flags = tuple(rng.random() < 0.5 for _ in range(2 * m))
            cover = CycleCover((cycle,), (flags,))
            indeg = [0] * (2 * m)
            outdeg = [0] * (2 * m)
            k = len(cycle)
            for i in range(k):
                a, b = cycle[i], cycle[(i + 1) % k]
                if flags[i]:
                    outdeg[a] += 1
                    indeg[b] += 1
                else:
                    outdeg[b] += 1
                    indeg[a] += 1
            expected = all(indeg[v] == 2 or outdeg[v] == 2 for v in range(2 * m))
            assert bool(validate_anti_directed_cover(d, cover)) == expected
