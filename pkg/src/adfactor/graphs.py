"""Digraphs, simple graphs, cycle covers, and the anti-directed validator.

Vertices are dense integers ``0..n-1``.  All values are immutable after
construction and safe to share across workers.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import IO, Iterable


class GraphFormatError(ValueError):
    """Malformed graph text.  ``line`` is the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class Digraph:
    """Directed graph on ``0..n-1`` with no self-loops and no parallel arcs.

    The opposite pair ``(v, u)`` may coexist with ``(u, v)``; it is a distinct
    arc, not a duplicate.
    """

    __slots__ = ("n", "arcs", "out_masks", "in_masks")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]):
        if n < 1:
            raise ValueError("vertex count must be at least 1")
        arc_set = frozenset((int(u), int(v)) for u, v in arcs)
        out = [0] * n
        inc = [0] * n
        for u, v in arc_set:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range 0..{n - 1}")
            out[u] |= 1 << v
            inc[v] |= 1 << u
        self.n = n
        self.arcs = arc_set
        self.out_masks = tuple(out)
        self.in_masks = tuple(inc)

    def out_degree(self, v: int) -> int:
        return self.out_masks[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_masks[v].bit_count()

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_masks[u] >> v & 1)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={len(self.arcs)})"


class SimpleGraph:
    """Undirected simple graph on ``0..n-1``; edges stored as sorted pairs."""

    __slots__ = ("n", "edges", "adj_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise ValueError("vertex count must be at least 1")
        norm = frozenset((min(u, v), max(u, v)) for u, v in edges)
        adj = [0] * n
        for u, v in norm:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u and v < n):
                raise ValueError(f"edge ({u}, {v}) out of range 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.edges = norm
        self.adj_masks = tuple(adj)

    def degree(self, v: int) -> int:
        return self.adj_masks[v].bit_count()

    def is_regular(self, k: int) -> bool:
        return all(self.degree(v) == k for v in range(self.n))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SimpleGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={len(self.edges)})"


def min_degree(d: Digraph) -> int:
    """min over vertices of min(outdegree, indegree)."""
    return min(min(d.out_degree(v), d.in_degree(v)) for v in range(d.n))


def underlying_edges(d: Digraph) -> frozenset[tuple[int, int]]:
    """Edge set of the simple graph underlying ``d``."""
    return frozenset((min(u, v), max(u, v)) for u, v in d.arcs)


def doubled_edges(d: Digraph) -> frozenset[tuple[int, int]]:
    """Pairs {u, v} for which both arcs (u, v) and (v, u) are present."""
    return frozenset(
        (u, v) for u, v in d.arcs if u < v and (v, u) in d.arcs
    )


# ---------------------------------------------------------------------------
# Text format: first non-comment line "n", then one "u v" per line,
# '#' starts a comment line.  SimpleGraph lines additionally require u < v.
# ---------------------------------------------------------------------------


def _data_lines(text: str | IO[str]):
    if hasattr(text, "read"):
        text = text.read()
    for lineno, raw in enumerate(str(text).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_header(lineno: int, line: str) -> int:
    try:
        n = int(line)
    except ValueError:
        raise GraphFormatError(f"expected vertex count, got {line!r}", lineno)
    if n < 1:
        raise GraphFormatError(f"vertex count must be positive, got {n}", lineno)
    return n


def _parse_pair(lineno: int, line: str, n: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
    try:
        u, v = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"non-integer endpoint in {line!r}", lineno)
    if not (0 <= u < n and 0 <= v < n):
        raise GraphFormatError(f"endpoint out of range 0..{n - 1}: {line!r}", lineno)
    if u == v:
        raise GraphFormatError(f"self-loop at vertex {u}", lineno)
    return u, v


def parse_digraph(text: str | IO[str]) -> Digraph:
    """Parse the digraph text format, reporting errors with line numbers."""
    n = None
    arcs: dict[tuple[int, int], int] = {}
    for lineno, line in _data_lines(text):
        if n is None:
            n = _parse_header(lineno, line)
            continue
        u, v = _parse_pair(lineno, line, n)
        if (u, v) in arcs:
            raise GraphFormatError(
                f"duplicate arc ({u}, {v}), first declared on line {arcs[(u, v)]}",
                lineno,
            )
        arcs[(u, v)] = lineno
    if n is None:
        raise GraphFormatError("empty input: missing vertex count")
    return Digraph(n, arcs.keys())


def serialize_digraph(d: Digraph) -> str:
    lines = [str(d.n)]
    lines.extend(f"{u} {v}" for u, v in sorted(d.arcs))
    return "\n".join(lines) + "\n"


def parse_simple_graph(text: str | IO[str]) -> SimpleGraph:
    """Parse the undirected format; each edge line must have u < v."""
    n = None
    edges: dict[tuple[int, int], int] = {}
    for lineno, line in _data_lines(text):
        if n is None:
            n = _parse_header(lineno, line)
            continue
        u, v = _parse_pair(lineno, line, n)
        if u > v:
            raise GraphFormatError(f"edge must be written with u < v: {line!r}", lineno)
        if (u, v) in edges:
            raise GraphFormatError(
                f"duplicate edge ({u}, {v}), first declared on line {edges[(u, v)]}",
                lineno,
            )
        edges[(u, v)] = lineno
    if n is None:
        raise GraphFormatError("empty input: missing vertex count")
    return SimpleGraph(n, edges.keys())


def serialize_simple_graph(g: SimpleGraph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Cycle covers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycleCover:
    """Vertex-disjoint cycles, optionally annotated with arc directions.

    ``orientations[c][i]`` is True when the i-th edge of cycle ``c`` is the
    arc ``cycles[c][i] -> cycles[c][i+1]`` (indices wrap around), and False
    when it is the reverse arc.
    """

    cycles: tuple[tuple[int, ...], ...]
    orientations: tuple[tuple[bool, ...], ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(tuple(c) for c in self.cycles))
        if self.orientations is not None:
            ors = tuple(tuple(bool(b) for b in o) for o in self.orientations)
            if len(ors) != len(self.cycles) or any(
                len(o) != len(c) for o, c in zip(ors, self.cycles)
            ):
                raise ValueError("orientation shape does not match cycles")
            object.__setattr__(self, "orientations", ors)

    def vertices(self) -> frozenset[int]:
        return frozenset(v for cycle in self.cycles for v in cycle)


@dataclass(frozen=True)
class CoverCheck:
    """Validation outcome; falsy when the cover is rejected."""

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _alternating_orientations(length: int, start_out: bool) -> tuple[bool, ...]:
    # start_out: first vertex is a source (both incident arcs point out).
    return tuple((i % 2 == 0) == start_out for i in range(length))


def _orientation_realizable(
    d: Digraph, cycle: tuple[int, ...], flags: tuple[bool, ...]
) -> bool:
    k = len(cycle)
    for i in range(k):
        a, b = cycle[i], cycle[(i + 1) % k]
        if flags[i]:
            if not d.has_arc(a, b):
                return False
        elif not d.has_arc(b, a):
            return False
    return True


def validate_anti_directed_cover(d: Digraph, cover: CycleCover) -> CoverCheck:
    """Check that ``cover`` is a spanning anti-directed cycle cover of ``d``.

    Accepts iff the cycles partition the vertex set, every cycle has even
    length at least 4, every edge is realizable by an arc of ``d`` in the
    annotated direction, and at every vertex both incident cover arcs point
    in or both point out.  When no orientation is annotated, each cycle must
    admit one of its two alternating orientations.
    """
    seen: set[int] = set()
    count = 0
    for cycle in cover.cycles:
        count += len(cycle)
        seen.update(cycle)
    if count != d.n or seen != set(range(d.n)):
        return CoverCheck(False, "cycles do not span every vertex exactly once")
    for cycle in cover.cycles:
        if len(cycle) < 4 or len(cycle) % 2 != 0:
            return CoverCheck(
                False, f"cycle of length {len(cycle)} cannot be anti-directed"
            )
    if cover.orientations is None:
        for cycle in cover.cycles:
            k = len(cycle)
            if not any(
                _orientation_realizable(d, cycle, _alternating_orientations(k, s))
                for s in (True, False)
            ):
                return CoverCheck(
                    False, f"no alternating orientation of cycle {cycle} uses arcs of d"
                )
        return CoverCheck(True)
    for cycle, flags in zip(cover.cycles, cover.orientations):
        if not _orientation_realizable(d, cycle, flags):
            return CoverCheck(False, f"annotated arc missing from d on cycle {cycle}")
        k = len(cycle)
        for i in range(k):
            # Equal consecutive flags make a directed path through cycle[i+1].
            if flags[i] == flags[(i + 1) % k]:
                return CoverCheck(
                    False,
                    f"consecutive arcs form a directed path at vertex {cycle[(i + 1) % k]}",
                )
    return CoverCheck(True)
