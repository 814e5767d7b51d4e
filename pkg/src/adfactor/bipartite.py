"""Equipartitions, one-way bipartite graphs, and 2-factor machinery.

The bipartite graph built from a digraph keeps only the arcs that cross the
partition from X to Y; its underlying simple bipartite graph is what the
2-factor and Hamilton procedures operate on.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import IO, Iterable, Literal

from . import kernels
from .graphs import CycleCover, Digraph, GraphFormatError, _data_lines, _parse_header, _parse_pair

EXHAUSTIVE_SUBSET_LIMIT = 20
DEFAULT_NODE_BUDGET = 1_000_000


@dataclass(frozen=True)
class Equipartition:
    """A split of 0..n-1 into equal halves X and Y."""

    X: frozenset[int]
    Y: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "X", frozenset(self.X))
        object.__setattr__(self, "Y", frozenset(self.Y))
        n = len(self.X) + len(self.Y)
        if self.X & self.Y:
            raise ValueError("X and Y overlap")
        if len(self.X) != len(self.Y):
            raise ValueError("sides have unequal sizes")
        if self.X | self.Y != frozenset(range(n)):
            raise ValueError("X and Y do not cover 0..n-1")

    @classmethod
    def from_source_set(cls, n: int, xs: Iterable[int]) -> "Equipartition":
        x = frozenset(xs)
        return cls(x, frozenset(range(n)) - x)

    @property
    def n(self) -> int:
        return len(self.X) + len(self.Y)

    def x_sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.X))

    def y_sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.Y))


@dataclass(frozen=True)
class BipartiteInstance:
    """Underlying bipartite graph of the X-to-Y restriction of a digraph."""

    partition: Equipartition
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edges))
        X, Y = self.partition.X, self.partition.Y
        for x, y in self.edges:
            if x not in X or y not in Y:
                raise ValueError(f"edge ({x}, {y}) does not cross from X to Y")

    @property
    def m(self) -> int:
        return len(self.partition.X)

    def x_adjacency(self) -> list[int]:
        """Bitmasks over sorted-Y indices, one per sorted-X vertex."""
        xs = self.partition.x_sorted()
        ys = self.partition.y_sorted()
        yindex = {y: i for i, y in enumerate(ys)}
        adj = [0] * len(xs)
        xindex = {x: i for i, x in enumerate(xs)}
        for x, y in self.edges:
            adj[xindex[x]] |= 1 << yindex[y]
        return adj

    def degree_of(self, v: int) -> int:
        if v in self.partition.X:
            return sum(1 for x, _ in self.edges if x == v)
        return sum(1 for _, y in self.edges if y == v)

    def degree_sequence(self) -> list[int]:
        """Nondecreasing degrees of all n vertices, both sides combined."""
        deg = Counter()
        for x, y in self.edges:
            deg[x] += 1
            deg[y] += 1
        return sorted(deg.get(v, 0) for v in range(self.partition.n))


@dataclass(frozen=True)
class DeficiencyWitness:
    """A one-sided set whose capped neighbor multiset is too small."""

    vertices: frozenset[int]
    side: Literal["X", "Y"]
    multiset_size: int

    def __post_init__(self):
        if self.multiset_size >= 2 * len(self.vertices):
            raise ValueError("witness is not deficient")


def build_bipartite(d: Digraph, p: Equipartition) -> BipartiteInstance:
    """Keep exactly the arcs of ``d`` that go from X to Y."""
    if p.n != d.n:
        raise ValueError("partition does not match the digraph's vertex set")
    edges = frozenset((u, v) for u, v in d.arcs if u in p.X and v in p.Y)
    return BipartiteInstance(p, edges)


def neighborhood_multiset(
    g: BipartiteInstance, U: Iterable[int]
) -> tuple[int, Counter]:
    """Neighbor multiset of ``U`` with per-neighbor multiplicity capped at 2.

    ``U`` must lie wholly within one side.  Returns (size, multiset).
    """
    Uset = frozenset(U)
    if Uset <= g.partition.X:
        pairs = ((x, y) for x, y in g.edges if x in Uset)
    elif Uset <= g.partition.Y:
        pairs = ((y, x) for x, y in g.edges if y in Uset)
    else:
        raise ValueError("U straddles both sides of the partition")
    raw = Counter(v for _, v in pairs)
    capped = Counter({v: min(2, c) for v, c in raw.items()})
    return sum(capped.values()), capped


def _multiset_size_masked(adj: list[int], members: Iterable[int]) -> int:
    once = 0
    twice = 0
    for i in members:
        a = adj[i]
        twice |= once & a
        once |= a
    return once.bit_count() + twice.bit_count()


def has_two_factor(g: BipartiteInstance) -> CycleCover | None:
    """Spanning 2-regular subgraph decomposed into cycles, if one exists.

    Exact: reduces to a degree-constrained subgraph computation in which
    every vertex needs degree exactly 2 and each edge is used at most once.
    Returned cycles carry no orientation annotation.
    """
    xs = g.partition.x_sorted()
    ys = g.partition.y_sorted()
    m = len(xs)
    local = kernels.bip_two_factor(m, g.x_adjacency())
    if local is None:
        return None
    cycles = tuple(
        tuple(xs[v] if v < m else ys[v - m] for v in cycle) for cycle in local
    )
    return CycleCover(cycles)


def _deficient_subset_within(
    m: int, adj: list[int], allowed: frozenset[int]
) -> frozenset[int] | None:
    """Deficient subset of ``allowed``, or None if none exists.

    Runs the degree-2 flow with source capacity only toward allowed X
    vertices; an unsaturated flow yields a deficient subset from the min
    cut (cut-side X vertices have a capped neighbor multiset smaller than
    twice their number), and saturation rules every subset out.
    """
    cap: dict[tuple[int, int], int] = {}
    nbrs: list[set[int]] = [set() for _ in range(2 * m + 2)]
    sink = 2 * m + 1

    def add(u: int, v: int, c: int):
        cap[(u, v)] = cap.get((u, v), 0) + c
        cap.setdefault((v, u), 0)
        nbrs[u].add(v)
        nbrs[v].add(u)

    for i in allowed:
        add(0, 1 + i, 2)
        a = adj[i]
        while a:
            low = a & -a
            j = low.bit_length() - 1
            a ^= low
            add(1 + i, m + 1 + j, 1)
    for j in range(m):
        add(m + 1 + j, sink, 2)

    flow = 0
    while True:
        parent: dict[int, int | None] = {0: None}
        queue = [0]
        while queue:
            u = queue.pop(0)
            for v in nbrs[u]:
                if v not in parent and cap[(u, v)] > 0:
                    parent[v] = u
                    queue.append(v)
        if sink not in parent:
            break
        v = sink
        while parent[v] is not None:
            u = parent[v]
            cap[(u, v)] -= 1
            cap[(v, u)] += 1
            v = u
        flow += 1
    if flow == 2 * len(allowed):
        return None
    reachable = {0}
    queue = [0]
    while queue:
        u = queue.pop(0)
        for v in nbrs[u]:
            if v not in reachable and cap[(u, v)] > 0:
                reachable.add(v)
                queue.append(v)
    members = frozenset(i for i in allowed if 1 + i in reachable)
    assert members and _multiset_size_masked(adj, members) < 2 * len(members)
    return members


def find_deficient_set(
    g: BipartiteInstance, mode: Literal["exhaustive", "minimal"] = "exhaustive"
) -> DeficiencyWitness | None:
    """Search the X side for a set U with |N(2)(U)| < 2|U|.

    Exhaustive mode enumerates subsets by increasing size (first hit has
    minimum cardinality) and is guarded to |X| <= 20.  Minimal mode starts
    from the cut-derived deficient set and eliminates one vertex at a time:
    a vertex stays only when no deficient subset avoids it, which a single
    restricted flow computation decides, so the result is inclusion-minimal.
    Stripping vertices while deficiency persists is not enough: a stuck
    larger set can hide a deficient subset more than one removal away.
    """
    xs = g.partition.x_sorted()
    m = len(xs)
    adj = g.x_adjacency()
    if mode == "exhaustive":
        if m > EXHAUSTIVE_SUBSET_LIMIT:
            raise ValueError(
                f"exhaustive search limited to |X| <= {EXHAUSTIVE_SUBSET_LIMIT}, got {m}"
            )
        for size in range(1, m + 1):
            for members in combinations(range(m), size):
                ms = _multiset_size_masked(adj, members)
                if ms < 2 * size:
                    return DeficiencyWitness(
                        frozenset(xs[i] for i in members), "X", ms
                    )
        return None
    if mode != "minimal":
        raise ValueError(f"unknown mode {mode!r}")
    current = _deficient_subset_within(m, adj, frozenset(range(m)))
    if current is None:
        return None
    for i in sorted(current):
        if i not in current:
            continue
        smaller = _deficient_subset_within(m, adj, current - {i})
        if smaller is not None:
            current = smaller
    ms = _multiset_size_masked(adj, current)
    return DeficiencyWitness(frozenset(xs[i] for i in current), "X", ms)


@dataclass(frozen=True)
class HamiltonResult:
    status: Literal["yes", "no", "unknown"]
    cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.status == "yes"


def has_hamilton_cycle(
    g: BipartiteInstance, node_budget: int = DEFAULT_NODE_BUDGET
) -> HamiltonResult:
    """Backtracking Hamilton-cycle search with an explicit node budget.

    "unknown" is an outcome, not an exception: it means the budget ran out
    before the search tree was exhausted.
    """
    xs = g.partition.x_sorted()
    ys = g.partition.y_sorted()
    m = len(xs)
    status, cycle = kernels.bip_hamilton(m, g.x_adjacency(), node_budget)
    if status == 1:
        assert cycle is not None
        return HamiltonResult(
            "yes", tuple(xs[v] if v < m else ys[v - m] for v in cycle)
        )
    return HamiltonResult("no" if status == 0 else "unknown")


# ---------------------------------------------------------------------------
# Necessary degree conditions on the combined nondecreasing degree sequence
# (1-based positions).  Each returns True when the respective condition a
# factor-free / Hamilton-free bipartite graph must satisfy actually holds.
# ---------------------------------------------------------------------------


def _check_sequence(degseq: list[int], n: int) -> list[int]:
    if len(degseq) != n:
        raise ValueError(f"degree sequence has length {len(degseq)}, expected {n}")
    if any(degseq[i] > degseq[i + 1] for i in range(n - 1)):
        raise ValueError("degree sequence must be nondecreasing")
    if n % 2:
        raise ValueError("order must be even")
    return list(degseq)


def chvatal_condition_holds(degseq: list[int], n: int) -> bool:
    """Chvatal's bipartite condition: some i <= n/4 with d_i <= i and
    d_{n/2} <= n/2 - i.  Necessary for the graph to lack a Hamilton cycle."""
    d = _check_sequence(degseq, n)

    def at(i: int) -> int:
        return d[i - 1]

    half = n // 2
    return any(at(i) <= i and at(half) <= half - i for i in range(1, n // 4 + 1))


def _small_degree_pair_condition(d: list[int], cap: int) -> bool:
    # some k <= cap with d_k <= k and d_{k-1} <= k-1 (vacuous at k = 1)
    def at(i: int) -> int:
        return d[i - 1]

    return any(
        at(k) <= k and (k == 1 or at(k - 1) <= k - 1) for k in range(1, cap + 1)
    )


def two_factor_degree_condition_mod0(degseq: list[int], n: int) -> bool:
    """Necessary condition for a factor-free bipartite graph, order 0 mod 4.

    Requires n >= 12.  Holds when some k <= n/4 gives d_k <= k and
    d_{k-1} <= k-1, or when d_{n/4-1} <= n/4 - 1.
    """
    if n % 4 != 0 or n < 12:
        raise ValueError("this condition applies to orders n = 4s >= 12")
    d = _check_sequence(degseq, n)
    q = n // 4
    return _small_degree_pair_condition(d, q) or d[q - 2] <= q - 1


def two_factor_degree_condition_mod2(degseq: list[int], n: int) -> bool:
    """Necessary condition for a factor-free bipartite graph, order 2 mod 4.

    Requires n >= 14.  Holds when some k <= (n-2)/4 gives d_k <= k and
    d_{k-1} <= k-1, or when d_{(n-2)/2} <= (n-2)/4.
    """
    if n % 4 != 2 or n < 14:
        raise ValueError("this condition applies to orders n = 4s + 2 >= 14")
    d = _check_sequence(degseq, n)
    q = (n - 2) // 4
    return _small_degree_pair_condition(d, q) or d[(n - 2) // 2 - 1] <= q


# ---------------------------------------------------------------------------
# Serialization: digraph format plus one "X: v1 v2 ..." line
# ---------------------------------------------------------------------------


def parse_bipartite_instance(text: str | IO[str]) -> BipartiteInstance:
    """Digraph text plus a partition line ``X: v1 v2 ...``."""
    n = None
    xline: list[int] | None = None
    arcs: dict[tuple[int, int], int] = {}
    for lineno, line in _data_lines(text):
        if n is None:
            n = _parse_header(lineno, line)
            continue
        if line.startswith("X:"):
            if xline is not None:
                raise GraphFormatError("duplicate partition line", lineno)
            try:
                xline = [int(t) for t in line[2:].split()]
            except ValueError:
                raise GraphFormatError(f"bad partition line {line!r}", lineno)
            continue
        u, v = _parse_pair(lineno, line, n)
        if (u, v) in arcs:
            raise GraphFormatError(f"duplicate arc ({u}, {v})", lineno)
        arcs[(u, v)] = lineno
    if n is None:
        raise GraphFormatError("empty input: missing vertex count")
    if xline is None:
        raise GraphFormatError("missing partition line 'X: ...'")
    partition = Equipartition.from_source_set(n, xline)
    d = Digraph(n, arcs.keys())
    return build_bipartite(d, partition)


def serialize_bipartite_instance(g: BipartiteInstance) -> str:
    lines = [str(g.partition.n)]
    lines.append("X: " + " ".join(str(v) for v in g.partition.x_sorted()))
    lines.extend(f"{x} {y}" for x, y in sorted(g.edges))
    return "\n".join(lines) + "\n"
