"""Seeded, reproducible graph generators used by the CLI and the test corpora.

All randomness flows through ``random.Random`` seeded with caller-supplied
values; string seeds are hashed stably by the stdlib, so runs reproduce
across processes and platforms.
"""
from __future__ import annotations

import random
from itertools import combinations

from .bipartite import BipartiteInstance, Equipartition
from .graphs import Digraph, SimpleGraph


def complete_digraph(n: int) -> Digraph:
    return Digraph(n, ((u, v) for u in range(n) for v in range(n) if u != v))


def split_complete_digraph(n: int) -> Digraph:
    """Two disjoint complete digraphs on n/2 vertices each.

    For n = 2 mod 4 the halves have odd order, so no spanning collection of
    even cycles fits inside them and nothing crosses: the family has min
    degree n/2 - 1 and no anti-directed 2-factor.
    """
    if n % 2 or n < 2:
        raise ValueError("order must be even and positive")
    half = n // 2
    arcs = [(u, v) for u in range(half) for v in range(half) if u != v]
    arcs += [(u + half, v + half) for u in range(half) for v in range(half) if u != v]
    return Digraph(n, arcs)


def near_split_digraph(n: int) -> Digraph:
    """Two complete halves joined by a doubled perfect matching (min degree n/2)."""
    if n % 2 or n < 4:
        raise ValueError("order must be even and at least 4")
    half = n // 2
    base = split_complete_digraph(n)
    arcs = set(base.arcs)
    for i in range(half):
        arcs.add((i, i + half))
        arcs.add((i + half, i))
    return Digraph(n, arcs)


def circulant_digraph(n: int, offsets) -> Digraph:
    """Arcs v -> v+o (mod n) for each offset o; in/out degree both |offsets|."""
    offs = sorted(set(int(o) % n for o in offsets))
    if any(o == 0 for o in offs):
        raise ValueError("offset 0 would create self-loops")
    return Digraph(n, ((v, (v + o) % n) for v in range(n) for o in offs))


def random_min_degree_digraph(n: int, delta: int, seed) -> Digraph:
    """Random digraph with min in/out degree at least ``delta``.

    Every vertex draws delta out-neighbors and delta in-neighbors; the arc
    union keeps both floors.
    """
    if not 0 <= delta <= n - 1:
        raise ValueError(f"need 0 <= delta <= {n - 1}")
    rng = random.Random(f"min-degree:{seed}")
    arcs = set()
    for v in range(n):
        others = [w for w in range(n) if w != v]
        for w in rng.sample(others, delta):
            arcs.add((v, w))
        for w in rng.sample(others, delta):
            arcs.add((w, v))
    return Digraph(n, arcs)


def random_regular_digraph(n: int, delta: int, seed) -> Digraph:
    """Random digraph with in/out degree exactly ``delta`` everywhere.

    Union of delta arc-disjoint fixed-point-free permutations.  Each one is a
    perfect matching between out- and in-copies on the still-unused arcs;
    that remainder graph is regular, so a matching always exists, and the
    randomized search order supplies the randomness.
    """
    if not 1 <= delta <= n - 1:
        raise ValueError(f"need 1 <= delta <= {n - 1}")
    rng = random.Random(f"regular:{seed}")
    used: set[tuple[int, int]] = set()
    for _ in range(delta):
        allowed = [
            [j for j in range(n) if j != i and (i, j) not in used] for i in range(n)
        ]
        for lst in allowed:
            rng.shuffle(lst)
        match_to = [-1] * n  # in-copy j -> out-copy i

        def augment(i: int, seen: set[int]) -> bool:
            for j in allowed[i]:
                if j in seen:
                    continue
                seen.add(j)
                if match_to[j] == -1 or augment(match_to[j], seen):
                    match_to[j] = i
                    return True
            return False

        for i in rng.sample(range(n), n):
            if not augment(i, set()):
                raise RuntimeError("no perfect matching on remaining arcs")
        used.update((i, j) for j, i in enumerate(match_to))
    return Digraph(n, used)


def random_tournament(n: int, seed) -> Digraph:
    rng = random.Random(f"tournament:{seed}")
    arcs = []
    for u, v in combinations(range(n), 2):
        arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph(n, arcs)


def random_digraph(n: int, p: float, seed) -> Digraph:
    """Each ordered pair becomes an arc independently with probability p."""
    rng = random.Random(f"digraph:{seed}")
    arcs = [
        (u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p
    ]
    return Digraph(n, arcs)


def random_bipartite(m: int, p: float, seed) -> BipartiteInstance:
    """Bipartite instance on 0..2m-1 with X = 0..m-1 and edge probability p."""
    rng = random.Random(f"bipartite:{seed}")
    part = Equipartition.from_source_set(2 * m, range(m))
    edges = [
        (x, y + m) for x in range(m) for y in range(m) if rng.random() < p
    ]
    return BipartiteInstance(part, frozenset(edges))


# ---------------------------------------------------------------------------
# Cubic graphs
# ---------------------------------------------------------------------------


def generalized_petersen(k: int, j: int) -> SimpleGraph:
    """Outer k-cycle, inner k-cycle with step j, plus spokes."""
    if k < 3 or not 1 <= j < k or j == k - j:
        raise ValueError("need k >= 3 and 1 <= j < k with j != k/2")
    edges = []
    for i in range(k):
        edges.append((i, (i + 1) % k))
        edges.append((k + i, k + (i + j) % k))
        edges.append((i, k + i))
    return SimpleGraph(2 * k, edges)


def prism_graph() -> SimpleGraph:
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    return SimpleGraph(6, edges)


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, combinations(range(n), 2))


def complete_bipartite_graph(a: int, b: int) -> SimpleGraph:
    return SimpleGraph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


NAMED_CUBIC = {
    "k4": lambda: complete_graph(4),
    "k33": lambda: complete_bipartite_graph(3, 3),
    "prism": prism_graph,
    "petersen": lambda: generalized_petersen(5, 2),
    "mobius_kantor": lambda: generalized_petersen(8, 3),
}


def cubic_graph(name: str) -> SimpleGraph:
    try:
        g = NAMED_CUBIC[name]()
    except KeyError:
        raise ValueError(
            f"unknown cubic graph {name!r}; choose from {sorted(NAMED_CUBIC)}"
        )
    return g


def random_cubic(n: int, seed, max_tries: int = 10_000) -> SimpleGraph:
    """Random 3-regular graph by stub pairing with simplicity rejection."""
    if n % 2 or n < 4:
        raise ValueError("cubic graphs need even order >= 4")
    rng = random.Random(f"cubic:{seed}")
    stubs = [v for v in range(n) for _ in range(3)]
    for _ in range(max_tries):
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return SimpleGraph(n, edges)
    raise RuntimeError(f"no simple pairing found after {max_tries} tries")
