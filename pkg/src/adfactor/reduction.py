"""Cubic 3-edge-coloring and anti-directed 2-factors, each reducible to the
other.

Doubling every edge of a cubic graph into opposite arcs turns proper
3-edge-colorability into anti-directed 2-factor existence: two color classes
form a spanning union of even cycles, the third a perfect matching.  The
bridge converters transport witnesses across that equivalence in both
directions.
"""
from __future__ import annotations

from .graphs import CycleCover, Digraph, SimpleGraph, validate_anti_directed_cover
from .solver import decide_adf


def _require_cubic(g: SimpleGraph):
    if not g.is_regular(3):
        raise ValueError("input graph is not 3-regular")


def cubic_to_digraph(g: SimpleGraph) -> Digraph:
    """Replace each edge {u, v} by the opposite arcs (u, v) and (v, u)."""
    _require_cubic(g)
    arcs = []
    for u, v in g.edges:
        arcs.append((u, v))
        arcs.append((v, u))
    return Digraph(g.n, arcs)


def three_edge_colorable_via_adf(g: SimpleGraph, strategy: str = "auto") -> bool | None:
    """3-edge-colorability decided through the doubled digraph's 2-factor.

    Returns None when the solver is inconclusive (sampled strategy only).
    """
    _require_cubic(g)
    cert = decide_adf(cubic_to_digraph(g), strategy)
    if cert.decision == "unknown":
        return None
    return cert.decision == "yes"


def three_edge_color_direct(g: SimpleGraph) -> dict[tuple[int, int], int] | None:
    """Exact backtracking 3-edge-coloring, or None when impossible.

    The independent oracle for the reduction: no digraph machinery involved.
    """
    _require_cubic(g)
    # Order edges so each one touches previously colored edges when possible.
    edges = sorted(g.edges)
    order: list[tuple[int, int]] = []
    placed = set()
    touched: set[int] = set()
    remaining = list(edges)
    while remaining:
        pick = next(
            (e for e in remaining if e[0] in touched or e[1] in touched),
            remaining[0],
        )
        remaining.remove(pick)
        order.append(pick)
        touched.update(pick)
        placed.add(pick)
    used_at = [0] * g.n  # bitmask of colors present at each vertex
    coloring: dict[tuple[int, int], int] = {}

    def backtrack(idx: int) -> bool:
        if idx == len(order):
            return True
        u, v = order[idx]
        taken = used_at[u] | used_at[v]
        for color in range(3):
            bit = 1 << color
            if taken & bit:
                continue
            used_at[u] |= bit
            used_at[v] |= bit
            coloring[(u, v)] = color
            if backtrack(idx + 1):
                return True
            used_at[u] ^= bit
            used_at[v] ^= bit
            del coloring[(u, v)]
        return False

    return dict(coloring) if backtrack(0) else None


def verify_coloring(g: SimpleGraph, coloring: dict[tuple[int, int], int]) -> bool:
    """Proper 3-edge-coloring check: all edges colored 0..2, no clash."""
    if set(coloring) != set(g.edges):
        return False
    if any(c not in (0, 1, 2) for c in coloring.values()):
        return False
    for v in range(g.n):
        seen = set()
        for (a, b), c in coloring.items():
            if v in (a, b):
                if c in seen:
                    return False
                seen.add(c)
    return True


def coloring_to_adf(g: SimpleGraph, coloring: dict[tuple[int, int], int]) -> CycleCover:
    """Cover of the doubled digraph from color classes 0 and 1.

    The two classes are perfect matchings, so their union is 2-regular and
    spans; its cycles alternate classes and are therefore even.
    """
    _require_cubic(g)
    if not verify_coloring(g, coloring):
        raise ValueError("input is not a proper 3-edge-coloring")
    nbrs: list[list[int]] = [[] for _ in range(g.n)]
    for (u, v), c in coloring.items():
        if c in (0, 1):
            nbrs[u].append(v)
            nbrs[v].append(u)
    if any(len(ns) != 2 for ns in nbrs):
        raise ValueError("color classes 0 and 1 do not form a 2-regular subgraph")
    seen = [False] * g.n
    cycles = []
    orientations = []
    for start in range(g.n):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        prev, cur = -1, start
        while True:
            a, b = nbrs[cur]
            nxt = b if a == prev else a
            if nxt == start:
                break
            cycle.append(nxt)
            seen[nxt] = True
            prev, cur = cur, nxt
        if len(cycle) % 2:
            raise ValueError("two color classes produced an odd cycle")
        cycles.append(tuple(cycle))
        # Both arcs exist for every edge, so alternate directions freely.
        orientations.append(tuple(i % 2 == 0 for i in range(len(cycle))))
    cover = CycleCover(tuple(cycles), tuple(orientations))
    check = validate_anti_directed_cover(cubic_to_digraph(g), cover)
    if not check:
        raise AssertionError(f"constructed cover failed validation: {check.reason}")
    return cover


def adf_to_coloring(g: SimpleGraph, cover: CycleCover) -> dict[tuple[int, int], int]:
    """Proper 3-edge-coloring from an anti-directed cover of the doubled digraph.

    Cover cycles are even: alternate colors 0/1 along each; the leftover
    edges form a perfect matching and take color 2.
    """
    _require_cubic(g)
    d = cubic_to_digraph(g)
    check = validate_anti_directed_cover(d, cover)
    if not check:
        raise ValueError(f"cover fails validation: {check.reason}")
    coloring: dict[tuple[int, int], int] = {}
    for cycle in cover.cycles:
        k = len(cycle)
        for i in range(k):
            u, v = cycle[i], cycle[(i + 1) % k]
            edge = (min(u, v), max(u, v))
            if edge not in g.edges:
                raise ValueError(f"cover edge {edge} is not an edge of the graph")
            coloring[edge] = i % 2
    rest = [e for e in g.edges if e not in coloring]
    degree_left = {v: 0 for v in range(g.n)}
    for u, v in rest:
        degree_left[u] += 1
        degree_left[v] += 1
        coloring[(u, v)] = 2
    if any(c != 1 for c in degree_left.values()):
        raise AssertionError("leftover edges do not form a perfect matching")
    if not verify_coloring(g, coloring):
        raise AssertionError("constructed coloring is not proper")
    return coloring


def coloring_json_dict(g: SimpleGraph, coloring: dict[tuple[int, int], int]) -> dict:
    edges = sorted(g.edges)
    return {
        "edges": [[u, v] for u, v in edges],
        "colors": [coloring[e] for e in edges],
    }
