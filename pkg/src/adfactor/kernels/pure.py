"""Pure-Python kernels for the hot inner loops.

All three kernels speak bitmask adjacency: ``adj[i]`` has bit ``j`` set when
left/X vertex ``i`` is adjacent to right/Y vertex ``j``.  Local vertex ids in
returned cycles are ``i`` for X vertices and ``m + j`` for Y vertices.

The compiled extension in ``_core`` exposes the same API; this module is the
fallback and also the reference for differential tests.
"""
from __future__ import annotations

from typing import Sequence


def bip_max_matching(n_left: int, n_right: int, adj: Sequence[int]) -> tuple[int, list[int]]:
    """Maximum bipartite matching (augmenting paths).

    Returns (size, match_left) where match_left[i] is the matched right
    vertex of left vertex i, or -1.
    """
    match_left = [-1] * n_left
    match_right = [-1] * n_right

    def augment(i: int, seen: int) -> tuple[bool, int]:
        while True:
            cand = adj[i] & ~seen
            if not cand:
                return False, seen
            low = cand & -cand
            j = low.bit_length() - 1
            seen |= low
            if match_right[j] == -1:
                match_right[j] = i
                match_left[i] = j
                return True, seen
            ok, seen = augment(match_right[j], seen)
            if ok:
                match_right[j] = i
                match_left[i] = j
                return True, seen

    size = 0
    for i in range(n_left):
        ok, _ = augment(i, 0)
        if ok:
            size += 1
    return size, match_left


def bip_two_factor(m: int, adj: Sequence[int]) -> list[list[int]] | None:
    """Spanning 2-regular subgraph of a bipartite graph with sides of size m.

    Max-flow with capacity 2 per vertex and 1 per edge; flow value 2m means
    every vertex attains degree exactly 2 and the chosen edges decompose into
    even cycles, which are returned.  Returns None when no such subgraph
    exists.
    """
    if m < 2:
        return None
    # Degree prescreen: every vertex needs at least two incident edges.
    col = [0] * m
    for i in range(m):
        a = adj[i]
        if a.bit_count() < 2:
            return None
        for j in range(m):
            col[j] |= (a >> j & 1) << i
    if any(c.bit_count() < 2 for c in col):
        return None

    # Flow network: node 0 = source, 1..m = X, m+1..2m = Y, 2m+1 = sink.
    n_nodes = 2 * m + 2
    sink = 2 * m + 1
    to: list[int] = []
    cap: list[int] = []
    head = [-1] * n_nodes
    nxt: list[int] = []

    def add_edge(u: int, v: int, c: int):
        to.append(v)
        cap.append(c)
        nxt.append(head[u])
        head[u] = len(to) - 1
        to.append(u)
        cap.append(0)
        nxt.append(head[v])
        head[v] = len(to) - 1

    for i in range(m):
        add_edge(0, 1 + i, 2)
        a = adj[i]
        while a:
            low = a & -a
            j = low.bit_length() - 1
            a ^= low
            add_edge(1 + i, m + 1 + j, 1)
    for j in range(m):
        add_edge(m + 1 + j, sink, 2)

    # Dinic.
    flow = 0
    level = [0] * n_nodes
    it = [0] * n_nodes
    while True:
        level = [-1] * n_nodes
        level[0] = 0
        queue = [0]
        for u in queue:
            e = head[u]
            while e != -1:
                if cap[e] > 0 and level[to[e]] == -1:
                    level[to[e]] = level[u] + 1
                    queue.append(to[e])
                e = nxt[e]
        if level[sink] == -1:
            break
        it = list(head)

        def dfs(u: int, pushed: int) -> int:
            if u == sink:
                return pushed
            while it[u] != -1:
                e = it[u]
                v = to[e]
                if cap[e] > 0 and level[v] == level[u] + 1:
                    got = dfs(v, min(pushed, cap[e]))
                    if got:
                        cap[e] -= got
                        cap[e ^ 1] += got
                        return got
                it[u] = nxt[e]
            return 0

        while True:
            pushed = dfs(0, 1 << 30)
            if not pushed:
                break
            flow += pushed
    if flow != 2 * m:
        return None

    # Saturated X->Y edges carry the factor.
    chosen: list[list[int]] = [[] for _ in range(2 * m)]
    for i in range(m):
        e = head[1 + i]
        while e != -1:
            v = to[e]
            if m + 1 <= v <= 2 * m and cap[e] == 0:
                j = v - (m + 1)
                chosen[i].append(m + j)
                chosen[m + j].append(i)
            e = nxt[e]
    return _cycles_from_two_regular(chosen)


def _cycles_from_two_regular(chosen: list[list[int]]) -> list[list[int]]:
    n = len(chosen)
    seen = [False] * n
    cycles: list[list[int]] = []
    for start in range(n):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        prev = -1
        cur = start
        while True:
            a, b = chosen[cur]
            step = b if a == prev else a
            if step == start:
                break
            cycle.append(step)
            seen[step] = True
            prev, cur = cur, step
        cycles.append(cycle)
    return cycles


def bip_hamilton(
    m: int, adj: Sequence[int], node_budget: int
) -> tuple[int, list[int] | None]:
    """Hamilton cycle search in a bipartite graph with sides of size m.

    Backtracking with degree pruning.  Returns (1, cycle) when found,
    (0, None) when the graph definitely has none, and (-1, None) when the
    node budget ran out before the search finished.
    """
    if m < 2:
        return 0, None
    nv = 2 * m
    nbr = [0] * nv
    for i in range(m):
        nbr[i] = adj[i] << m
        a = adj[i]
        while a:
            low = a & -a
            j = low.bit_length() - 1
            a ^= low
            nbr[m + j] |= 1 << i
    if any(b.bit_count() < 2 for b in nbr):
        return 0, None

    full = (1 << nv) - 1
    start_bit = 1
    path = [0]
    budget = node_budget

    def search(cur: int, visited: int) -> int:
        # 1 found, 0 exhausted subtree, -1 budget ran out
        nonlocal budget
        if budget <= 0:
            return -1
        budget -= 1
        if visited == full:
            return 1 if nbr[cur] & start_bit else 0
        free = full & ~visited
        head_bit = 1 << cur
        allowed = free | head_bit | start_bit
        forced_tail = 0
        scan = free
        while scan:
            low = scan & -scan
            scan ^= low
            u = low.bit_length() - 1
            avail = nbr[u] & allowed & ~low
            if avail.bit_count() < 2:
                return 0
            if not (avail & free & ~low):
                # u connects only to the path head and the start vertex: it
                # must be both the next and the final vertex.
                forced_tail += 1
                if forced_tail > 1 or free != low:
                    return 0
        cand = nbr[cur] & free
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            path.append(v)
            res = search(v, visited | low)
            if res != 0:
                return res
            path.pop()
        return 0

    res = search(0, 1)
    if res == 1:
        return 1, list(path)
    return (0, None) if res == 0 else (-1, None)
