import pytest

from adfactor.generators import (
    circulant_digraph,
    complete_digraph,
    near_split_digraph,
    random_bipartite,
    random_min_degree_digraph,
    random_regular_digraph,
    random_tournament,
    split_complete_digraph,
)
from adfactor.graphs import min_degree


def test_complete_digraph_degrees():
    d = complete_digraph(5)
    assert len(d.arcs) == 20
    assert min_degree(d) == 4


def test_split_complete_structure():
    d = split_complete_digraph(10)
    assert min_degree(d) == 4
    assert not any(u < 5 <= v or v < 5 <= u for u, v in d.arcs)
    with pytest.raises(ValueError):
        split_complete_digraph(7)


def test_near_split_degree_floor():
    d = near_split_digraph(10)
    assert min_degree(d) == 5


def test_circulant_uniform_degrees():
    d = circulant_digraph(9, [1, 3])
    assert all(d.out_degree(v) == 2 and d.in_degree(v) == 2 for v in range(9))
    with pytest.raises(ValueError):
        circulant_digraph(6, [0, 1])


def test_min_degree_generator_floor_and_determinism():
    for seed in range(5):
        d = random_min_degree_digraph(11, 4, seed)
        assert min_degree(d) >= 4
    assert random_min_degree_digraph(9, 3, "s") == random_min_degree_digraph(9, 3, "s")
    with pytest.raises(ValueError):
        random_min_degree_digraph(5, 5, 0)


def test_regular_generator_exact_degrees():
    for n, delta in [(6, 3), (10, 5), (12, 7), (8, 7)]:
        d = random_regular_digraph(n, delta, f"{n}:{delta}")
        assert all(
            d.out_degree(v) == delta and d.in_degree(v) == delta for v in range(n)
        )


def test_tournament_shape():
    d = random_tournament(7, 1)
    assert len(d.arcs) == 21
    assert not any((v, u) in d.arcs for u, v in d.arcs)


def test_random_bipartite_sides():
    g = random_bipartite(4, 0.5, 0)
    assert g.partition.x_sorted() == (0, 1, 2, 3)
    assert all(x < 4 <= y for x, y in g.edges)
    assert random_bipartite(4, 0.5, 0) == random_bipartite(4, 0.5, 0)
