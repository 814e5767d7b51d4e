"""Anti-directed 2-factor and Hamilton-cycle decisions over a digraph.

The decision procedure enumerates ordered source-set choices X (only arcs
from X to Y survive into the bipartite test, so X and its complement are
distinct choices), and asks the bipartite graph for a 2-factor or a Hamilton
cycle.  A hit lifts back to an anti-directed witness: X vertices become
sources, Y vertices sinks, and directions alternate by construction.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Literal

from . import kernels
from .bipartite import DEFAULT_NODE_BUDGET
from .counting import total_equipartitions, _bad_bound_sum, order_threshold
from .graphs import (
    CycleCover,
    Digraph,
    min_degree,
    serialize_digraph,
    validate_anti_directed_cover,
)

EXHAUSTIVE_ORDER_LIMIT = 24
AUTO_EXHAUSTIVE_ORDER = 14
COUNT_SHORTCUT_ORDER_LIMIT = 2000

Target = Literal["two_factor", "hamilton"]


class InternalInvariantError(AssertionError):
    """A solver-produced witness failed its own validation."""


@dataclass(frozen=True)
class Certificate:
    """Decision with method tag and witness or refutation evidence."""

    decision: Literal["yes", "no", "unknown"]
    method: Literal["exhaustive", "sampled", "degree-bound", "hall-condition", "reduction"]
    equipartition: tuple[int, ...] | None = None
    cover: CycleCover | None = None
    refutation: dict | None = None
    checked: int = 0
    total: int = 0

    def exit_code(self) -> int:
        return {"yes": 0, "no": 1, "unknown": 2}[self.decision]

    def to_json_dict(self) -> dict:
        cycles = None
        arc_directions = None
        if self.cover is not None:
            cycles = [list(c) for c in self.cover.cycles]
            if self.cover.orientations is not None:
                arc_directions = [
                    [1 if b else 0 for b in flags] for flags in self.cover.orientations
                ]
        out = {
            "decision": self.decision,
            "method": self.method,
            "equipartition": (
                {"X": list(self.equipartition)} if self.equipartition is not None else None
            ),
            "cycles": cycles,
            "arc_directions": arc_directions,
            "stats": {"checked": self.checked, "total": str(self.total)},
        }
        if self.refutation is not None:
            out["refutation"] = self.refutation
        return out


def _compressed_adjacency(d: Digraph, xs: tuple[int, ...], ys: tuple[int, ...]) -> list[int]:
    adj = []
    for x in xs:
        mask = d.out_masks[x]
        bits = 0
        for j, y in enumerate(ys):
            bits |= (mask >> y & 1) << j
        adj.append(bits)
    return adj


def _lift_cycles(
    local: list[list[int]], xs: tuple[int, ...], ys: tuple[int, ...]
) -> CycleCover:
    m = len(xs)
    cycles = []
    orientations = []
    for cycle in local:
        verts = tuple(xs[v] if v < m else ys[v - m] for v in cycle)
        # Arc runs out of the X endpoint of every cover edge.
        flags = tuple(cycle[i] < m for i in range(len(cycle)))
        cycles.append(verts)
        orientations.append(flags)
    return CycleCover(tuple(cycles), tuple(orientations))


def _source_set_test(
    d: Digraph, xs: tuple[int, ...], target: Target, node_budget: int
) -> tuple[Literal["yes", "no", "unknown"], CycleCover | None]:
    ys = tuple(v for v in range(d.n) if v not in set(xs))
    adj = _compressed_adjacency(d, xs, ys)
    m = len(xs)
    if target == "two_factor":
        local = kernels.bip_two_factor(m, adj)
        if local is None:
            return "no", None
        return "yes", _lift_cycles(local, xs, ys)
    status, cycle = kernels.bip_hamilton(m, adj, node_budget)
    if status == 1:
        assert cycle is not None
        return "yes", _lift_cycles([cycle], xs, ys)
    return ("no", None) if status == 0 else ("unknown", None)


def _checked_witness(d: Digraph, xs: tuple[int, ...], cover: CycleCover) -> CycleCover:
    check = validate_anti_directed_cover(d, cover)
    if not check:
        raise InternalInvariantError(
            f"constructed witness failed validation: {check.reason}"
        )
    return cover


def _sample_source_set(n: int, seed: int, index: int) -> tuple[int, ...]:
    # Stream keyed by (seed, index) so results are independent of worker count.
    rng = random.Random(f"{seed}:{index}")
    return tuple(sorted(rng.sample(range(n), n // 2)))


def _blocks(iterable, size: int):
    from itertools import islice

    it = iter(iterable)
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield block


def _search_block_worker(args):
    d, xs_block, target, node_budget, base = args
    any_unknown = False
    for off, xs in enumerate(xs_block):
        verdict, _ = _source_set_test(d, xs, target, node_budget)
        if verdict == "yes":
            return base + off, xs, any_unknown
        if verdict == "unknown":
            any_unknown = True
    return None, None, any_unknown


def _census_block_worker(args):
    d, xs_block, target, node_budget = args
    good = bad = unknown = 0
    for xs in xs_block:
        verdict, _ = _source_set_test(d, xs, target, node_budget)
        if verdict == "yes":
            good += 1
        elif verdict == "no":
            bad += 1
        else:
            unknown += 1
    return good, bad, unknown


def _first_hit(d, choices, target, node_budget, jobs):
    """Index and value of the first source set passing the test, plus an
    unknown-outcome flag; single-process fast path when jobs == 1."""
    if jobs <= 1:
        saw_unknown = False
        for i, xs in enumerate(choices):
            verdict, _ = _source_set_test(d, xs, target, node_budget)
            if verdict == "yes":
                return i, xs, saw_unknown
            if verdict == "unknown":
                saw_unknown = True
        return None, None, saw_unknown
    return _parallel_first_hit(d, choices, target, node_budget, jobs)


def _parallel_first_hit(d, choices, target, node_budget, jobs, block_size=256):
    """First source set passing the test, scanning blocks in order on a pool.

    Ordered block iteration keeps the lowest-index hit regardless of worker
    count.  Returns (global_hit_index, xs, saw_unknown).
    """
    import multiprocessing

    tasks = (
        (d, block, target, node_budget, i * block_size)
        for i, block in enumerate(_blocks(choices, block_size))
    )
    saw_unknown = False
    with multiprocessing.Pool(jobs) as pool:
        for hit, xs, block_unknown in pool.imap(_search_block_worker, tasks):
            saw_unknown = saw_unknown or block_unknown
            if hit is not None:
                return hit, xs, saw_unknown
    return None, None, saw_unknown


def _count_shortcut_applies(d: Digraph) -> bool:
    """Degree-based existence guarantee for an anti-directed 2-factor.

    Either min degree >= 3n/4 (the doubled-arc subgraph is dense enough for
    a Hamilton cycle), or the exact count inequality N > S certifies that
    some source-set choice admits a 2-factor.  For large orders the count is
    replaced by the certified order threshold at p = delta/n.
    """
    n = d.n
    if n % 2:
        return False
    delta = min_degree(d)
    if 4 * delta >= 3 * n and n >= 4:
        return True
    if 2 * delta <= n:
        return False
    if n >= 12 and n <= COUNT_SHORTCUT_ORDER_LIMIT:
        return total_equipartitions(n, delta) > _bad_bound_sum(n, delta, strong=False)
    p = Fraction(delta, n)
    if p >= Fraction(3, 4):
        return True
    bracket = order_threshold(p, "two_factor")
    return n > bracket.high - 1 and n > bracket.low  # n >= high means n > bound


def _decide(
    d: Digraph,
    target: Target,
    strategy: str,
    samples: int | None,
    seed: int,
    node_budget: int,
    exhaustive_limit: int,
    jobs: int,
) -> Certificate:
    n = d.n
    if n % 2:
        return Certificate(
            "no",
            "exhaustive",
            refutation={
                "reason": "odd-order",
                "detail": "every anti-directed cycle has even length, so no spanning collection exists",
            },
            checked=0,
            total=0,
        )
    total = math.comb(n, n // 2)

    if strategy == "auto":
        if n <= AUTO_EXHAUSTIVE_ORDER:
            strategy = "exhaustive"
        else:
            cert = _decide(d, target, "sampled", samples, seed, node_budget, exhaustive_limit, jobs)
            if cert.decision == "yes":
                return cert
            if target == "two_factor" and _count_shortcut_applies(d):
                return Certificate(
                    "yes", "degree-bound", checked=cert.checked, total=total
                )
            return cert

    if strategy == "exhaustive":
        if n > exhaustive_limit:
            raise ValueError(
                f"exhaustive enumeration rejected for n={n} > {exhaustive_limit}"
            )
        choices = combinations(range(n), n // 2)
        hit, xs, saw_unknown = _first_hit(d, choices, target, node_budget, jobs)
        if hit is not None:
            verdict, cover = _source_set_test(d, xs, target, node_budget)
            assert verdict == "yes" and cover is not None
            return Certificate(
                "yes",
                "exhaustive",
                equipartition=xs,
                cover=_checked_witness(d, xs, cover),
                checked=hit + 1,
                total=total,
            )
        if saw_unknown:
            return Certificate(
                "unknown",
                "exhaustive",
                refutation={"reason": "node-budget-exhausted"},
                checked=total,
                total=total,
            )
        return Certificate(
            "no",
            "exhaustive",
            refutation={"reason": "all-source-sets-exhausted"},
            checked=total,
            total=total,
        )

    if strategy == "sampled":
        k = samples if samples is not None else max(1000, 20 * n)
        choices = (_sample_source_set(n, seed, i) for i in range(k))
        hit, xs, _ = _first_hit(d, choices, target, node_budget, jobs)
        if hit is not None:
            verdict, cover = _source_set_test(d, xs, target, node_budget)
            assert verdict == "yes" and cover is not None
            return Certificate(
                "yes",
                "sampled",
                equipartition=xs,
                cover=_checked_witness(d, xs, cover),
                checked=hit + 1,
                total=total,
            )
        # Sampling can certify presence, never absence.
        return Certificate("unknown", "sampled", checked=k, total=total)

    raise ValueError(f"unknown strategy {strategy!r}")


def decide_adf(
    d: Digraph,
    strategy: str = "auto",
    *,
    samples: int | None = None,
    seed: int = 0,
    exhaustive_limit: int = EXHAUSTIVE_ORDER_LIMIT,
    jobs: int = 1,
) -> Certificate:
    """Decide whether ``d`` contains an anti-directed 2-factor.

    Yes-certificates carry a validated cover with arc directions and the
    source set used.  Exhaustive mode enumerates every C(n, n/2) source-set
    choice; sampled mode answers yes or unknown only.
    """
    return _decide(d, "two_factor", strategy, samples, seed, DEFAULT_NODE_BUDGET, exhaustive_limit, jobs)


def decide_adhc(
    d: Digraph,
    strategy: str = "auto",
    *,
    samples: int | None = None,
    seed: int = 0,
    node_budget: int = DEFAULT_NODE_BUDGET,
    exhaustive_limit: int = EXHAUSTIVE_ORDER_LIMIT,
    jobs: int = 1,
) -> Certificate:
    """Decide whether ``d`` contains an anti-directed Hamilton cycle."""
    cert = _decide(d, "hamilton", strategy, samples, seed, node_budget, exhaustive_limit, jobs)
    if cert.decision == "yes" and cert.cover is not None:
        if len(cert.cover.cycles) != 1 or len(cert.cover.cycles[0]) != d.n:
            raise InternalInvariantError("hamilton witness is not a single spanning cycle")
    return cert


# ---------------------------------------------------------------------------
# Directed 2-factor: perfect matching on the out/in split
# ---------------------------------------------------------------------------


def directed_two_factor_exists(d: Digraph) -> bool:
    """Exact test via perfect matching between out-copies and in-copies."""
    size, _ = kernels.bip_max_matching(d.n, d.n, d.out_masks)
    return size == d.n


def directed_two_factor_hall_oracle(d: Digraph) -> bool:
    """Subset-enumeration check of the out-neighborhood expansion condition
    (every X has at least |X| out-neighbors in total).  Guarded to n <= 20."""
    n = d.n
    if n > 20:
        raise ValueError("oracle limited to n <= 20")
    union = [0] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        union[s] = union[s ^ low] | d.out_masks[low.bit_length() - 1]
        if union[s].bit_count() < s.bit_count():
            return False
    return True


# ---------------------------------------------------------------------------
# Census over all (or sampled) source-set choices
# ---------------------------------------------------------------------------

CENSUS_EXHAUSTIVE_LIMIT = 16


@dataclass(frozen=True)
class CensusReport:
    n: int
    target: Target
    mode: str
    good: int
    bad: int
    unknown: int
    checked: int
    total: int
    seed: int | None = None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "target": self.target,
            "mode": self.mode,
            "seed": self.seed,
            "good": self.good,
            "bad": self.bad,
            "unknown": self.unknown,
            "checked": self.checked,
            "total": str(self.total),
        }


def equipartition_census(
    d: Digraph,
    target: Target = "two_factor",
    mode: str = "exhaustive",
    *,
    samples: int | None = None,
    seed: int = 0,
    node_budget: int = DEFAULT_NODE_BUDGET,
    jobs: int = 1,
) -> CensusReport:
    """Count source-set choices whose bipartite graph passes the target test."""
    n = d.n
    if n % 2:
        raise ValueError("census requires even order")
    total = math.comb(n, n // 2)
    if mode == "exhaustive":
        if n > CENSUS_EXHAUSTIVE_LIMIT:
            raise ValueError(f"exhaustive census limited to n <= {CENSUS_EXHAUSTIVE_LIMIT}")
        choices: Iterable[tuple[int, ...]] = combinations(range(n), n // 2)
        expected = total
    elif mode == "sample":
        k = samples if samples is not None else max(1000, 20 * n)
        choices = (_sample_source_set(n, seed, i) for i in range(k))
        expected = k
    else:
        raise ValueError(f"unknown census mode {mode!r}")

    good = bad = unknown = checked = 0
    if jobs <= 1:
        for xs in choices:
            verdict, _ = _source_set_test(d, xs, target, node_budget)
            checked += 1
            if verdict == "yes":
                good += 1
            elif verdict == "no":
                bad += 1
            else:
                unknown += 1
    else:
        import multiprocessing

        tasks = ((d, block, target, node_budget) for block in _blocks(choices, 256))
        with multiprocessing.Pool(jobs) as pool:
            for g_, b_, u_ in pool.imap_unordered(_census_block_worker, tasks):
                good += g_
                bad += b_
                unknown += u_
        checked = good + bad + unknown
    if mode == "exhaustive" and checked != total:
        raise InternalInvariantError("census did not cover every source-set choice")
    return CensusReport(
        n, target, mode, good, bad, unknown, checked, total,
        seed=seed if mode == "sample" else None,
    )


# ---------------------------------------------------------------------------
# Counterexample scan for the half-degree conjecture
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScanInstance:
    n: int
    family: str
    index: int
    decision: str
    digraph_text: str | None = None
    certificate: Certificate | None = None


@dataclass(frozen=True)
class ConjectureScanReport:
    n_values: tuple[int, ...]
    trials: int
    seed: int
    tested: int
    counterexamples: tuple[ScanInstance, ...]

    def to_json_dict(self) -> dict:
        return {
            "n_values": list(self.n_values),
            "trials": self.trials,
            "seed": self.seed,
            "tested": self.tested,
            "counterexamples": [
                {
                    "n": ce.n,
                    "family": ce.family,
                    "index": ce.index,
                    "digraph": ce.digraph_text,
                    "certificate": ce.certificate.to_json_dict() if ce.certificate else None,
                }
                for ce in self.counterexamples
            ],
        }


def scan_half_degree_conjecture(
    n_values: Iterable[int],
    trials: int,
    seed: int = 0,
    *,
    jobs: int = 1,
) -> ConjectureScanReport:
    """Hunt for digraphs with min degree >= n/2 and no anti-directed 2-factor.

    Every candidate generated has min in/out degree at least n/2; a reported
    counterexample always carries an exhaustive "no" certificate (sampling
    alone never produces a "no").
    """
    from .generators import (
        circulant_digraph,
        near_split_digraph,
        random_min_degree_digraph,
        random_regular_digraph,
    )

    n_tuple = tuple(sorted(set(int(n) for n in n_values)))
    if any(n % 2 for n in n_tuple):
        raise ValueError("scan requires even orders")
    tested = 0
    hits: list[ScanInstance] = []
    for n in n_tuple:
        half = n // 2
        structured = [
            ("circulant", circulant_digraph(n, range(1, half + 1))),
            ("near-split", near_split_digraph(n)),
        ]
        candidates = [(fam, 0, g) for fam, g in structured]
        for t in range(trials):
            g = random_min_degree_digraph(n, half, seed=f"{seed}:{n}:{t}")
            candidates.append(("random", t, g))
            # tight family: in/out degree exactly n/2 everywhere
            g = random_regular_digraph(n, half, seed=f"{seed}:{n}:{t}")
            candidates.append(("regular", t, g))
        for family, index, g in candidates:
            if min_degree(g) < half:
                raise InternalInvariantError("generator broke the degree floor")
            cert = decide_adf(g, "auto", seed=seed)
            tested += 1
            if cert.decision == "no":
                hits.append(
                    ScanInstance(
                        n, family, index, "no",
                        digraph_text=serialize_digraph(g),
                        certificate=cert,
                    )
                )
    return ConjectureScanReport(n_tuple, trials, seed, tested, tuple(hits))
