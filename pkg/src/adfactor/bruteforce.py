"""Independent brute-force search for anti-directed cycle covers.

This enumerator builds covers cycle by cycle, alternating source/sink roles
along each cycle, with no equipartition or matching machinery involved.  It
exists to cross-check the solver on small orders and is intentionally kept
separate from the kernels.
"""
from __future__ import annotations

from .graphs import CycleCover, Digraph


def find_cover_bruteforce(d: Digraph, single_cycle: bool = False) -> CycleCover | None:
    """First anti-directed spanning cycle cover found, or None.

    With ``single_cycle`` the cover must be one spanning cycle.  Exponential;
    intended for orders up to about 12.
    """
    n = d.n
    if n % 2 or n < 4:
        return None
    out = d.out_masks
    inc = d.in_masks

    cycles: list[tuple[list[int], list[bool]]] = []

    def close_flags(length: int, start_is_source: bool) -> list[bool]:
        # Flag i is True when the arc runs cycle[i] -> cycle[i+1].
        return [(i % 2 == 0) == start_is_source for i in range(length)]

    def extend_cycle(
        path: list[int],
        uncovered: int,
        start_is_source: bool,
        cur_is_source: bool,
    ) -> bool:
        cur = path[-1]
        start = path[0]
        k = len(path)
        if k >= 4 and k % 2 == 0 and path[1] < path[-1]:
            # Closing edge: cur and start have opposite roles on even cycles.
            closable = (out[cur] >> start & 1) if cur_is_source else (inc[cur] >> start & 1)
            if closable and not (single_cycle and uncovered):
                if cover_rest(uncovered, path, start_is_source):
                    return True
        # Next vertex w gets the opposite role: the connecting edge is
        # cur->w when cur is a source, w->cur when cur is a sink.
        cand = (out[cur] if cur_is_source else inc[cur]) & uncovered
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            path.append(w)
            if extend_cycle(path, uncovered & ~low, start_is_source, not cur_is_source):
                return True
            path.pop()
        return False

    def cover_rest(uncovered: int, closing_path: list[int] | None, closing_source: bool) -> bool:
        if closing_path is not None:
            cycles.append((list(closing_path), close_flags(len(closing_path), closing_source)))
        if uncovered == 0:
            return True
        low = uncovered & -uncovered
        v0 = low.bit_length() - 1
        for start_is_source in (True, False):
            if extend_cycle([v0], uncovered & ~low, start_is_source, start_is_source):
                return True
        if closing_path is not None:
            cycles.pop()
        return False

    if cover_rest((1 << n) - 1, None, True):
        return CycleCover(
            tuple(tuple(c) for c, _ in cycles),
            tuple(tuple(f) for _, f in cycles),
        )
    return None


def has_cover_bruteforce(d: Digraph, single_cycle: bool = False) -> bool:
    return find_cover_bruteforce(d, single_cycle) is not None
