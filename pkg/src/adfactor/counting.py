"""Exact verification of the equipartition counting argument.

Everything verdict-bearing here is integer or rational arithmetic; the order
thresholds are evaluated in interval arithmetic and reported as certified
integer brackets, never bare floats.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from mpmath import iv

from .graphs import Digraph, min_degree

Variant = Literal["hamilton", "two_factor"]

#: Failure row reported for this scan in earlier published work; the scan
#: compares its own findings against it and flags any difference.
REPORTED_SCAN_EXCEPTION: tuple[int, int] = (48, 22)


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def equipartition_degree_count(n: int, delta: int, k: int) -> int:
    """Number of equipartitions in which a fixed vertex of a digraph with
    uniform in/out degree ``delta`` gets degree ``k`` across the split.

    Zero outside the support window delta - n/2 + 1 <= k <= n/2.
    """
    if n % 2:
        raise ValueError("order must be even")
    if not 0 <= delta <= n - 1:
        raise ValueError(f"degree must lie in 0..{n - 1}")
    if k < 0 or k > n // 2 or k < delta - n // 2 + 1:
        return 0
    return 2 * _binom(delta, k) * _binom(n - delta - 1, n // 2 - k)


def total_equipartitions(n: int, delta: int) -> int:
    """Sum of the per-degree counts, cross-checked against C(n, n/2).

    Fails loudly on mismatch; a disagreement would mean an arithmetic bug.
    """
    lo = max(0, delta - n // 2 + 1)
    termwise = sum(
        equipartition_degree_count(n, delta, k) for k in range(lo, n // 2 + 1)
    )
    direct = math.comb(n, n // 2)
    if termwise != direct:
        raise ArithmeticError(
            f"count identity failed for n={n}, delta={delta}: {termwise} != {direct}"
        )
    return direct


def _bad_bound_sum(n: int, delta: int, strong: bool) -> Fraction:
    hi = n // 4 - 1
    lo = max(2, delta - n // 2 + 1)
    total = Fraction(0)
    for k in range(lo, hi + 1):
        den = 2 * k if (strong and k == hi) else k
        total += Fraction(equipartition_degree_count(n, delta, k), den)
    return n * total


def bad_partition_bound(n: int, delta: int) -> Fraction:
    """Upper bound on equipartitions whose bipartite graph has no 2-factor:
    n * (n_2/2 + n_3/3 + ... + n_{floor(n/4)-1}/(floor(n/4)-1)).

    Exact rational.  Sound for digraphs with min in/out degree > n/2 (the
    support below k = 2 is then empty).
    """
    if n % 2:
        raise ValueError("order must be even")
    if n < 12:
        raise ValueError("bound requires n >= 12")
    return _bad_bound_sum(n, delta, strong=False)


def bad_partition_bound_strong(n: int, delta: int) -> Fraction:
    """Tightened variant with the deepest term's denominator doubled."""
    if n % 2:
        raise ValueError("order must be even")
    if n < 12:
        raise ValueError("bound requires n >= 12")
    return _bad_bound_sum(n, delta, strong=True)


@dataclass(frozen=True)
class CountReport:
    """Exact totals for one (n, delta) row and the verdict N > S."""

    n: int
    delta: int
    N: int
    S: Fraction
    S_strong: Fraction
    terms: dict[int, int]
    holds: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "delta": self.delta,
            "N": str(self.N),
            "S": f"{self.S.numerator}/{self.S.denominator}",
            "S_strong": f"{self.S_strong.numerator}/{self.S_strong.denominator}",
            "terms": {str(k): str(v) for k, v in sorted(self.terms.items())},
            "holds": self.holds,
        }


def verify_count_inequality(n: int, delta: int) -> CountReport:
    """Exact comparison of the equipartition total N against the bound S."""
    N = total_equipartitions(n, delta)
    S = _bad_bound_sum(n, delta, strong=False)
    S_strong = _bad_bound_sum(n, delta, strong=True)
    lo = max(0, delta - n // 2 + 1)
    terms = {
        k: c
        for k in range(lo, n // 2 + 1)
        if (c := equipartition_degree_count(n, delta, k))
    }
    return CountReport(n, delta, N, S, S_strong, terms, N > S)


# ---------------------------------------------------------------------------
# Order thresholds with certified integer brackets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ThresholdBracket:
    p: Fraction
    variant: Variant
    low: int
    high: int
    value: str  # decimal enclosure, for display only
    precision: int

    def __str__(self) -> str:
        return f"{self.low} < bound < {self.high}"


def order_threshold(p: Fraction, variant: Variant, precision: int = 60) -> ThresholdBracket:
    """Smallest-order bound ln(4)/((p-1/2) ln((p+1/2)/(3/2-p))), with an
    extra -1/(p-1/2) term for the two-factor variant.

    Evaluated in interval arithmetic; precision doubles until the enclosing
    interval sits strictly inside consecutive integers.
    """
    p = Fraction(p)
    if not Fraction(1, 2) < p < Fraction(3, 4):
        raise ValueError("p must lie strictly between 1/2 and 3/4")
    if variant not in ("hamilton", "two_factor"):
        raise ValueError(f"unknown variant {variant!r}")
    dps = precision
    for _ in range(8):
        old_dps = iv.dps
        try:
            iv.dps = dps
            P = iv.mpf(p.numerator) / iv.mpf(p.denominator)
            x = P - iv.mpf(1) / iv.mpf(2)
            ratio = (P + iv.mpf(1) / iv.mpf(2)) / (iv.mpf(3) / iv.mpf(2) - P)
            val = iv.log(4) / (x * iv.log(ratio))
            if variant == "two_factor":
                val = val - 1 / x
            lo_floor = int(iv.mpf(val.a))
            hi_floor = int(iv.mpf(val.b))
            if lo_floor == hi_floor and val.a > lo_floor and val.b < lo_floor + 1:
                return ThresholdBracket(
                    p, variant, lo_floor, lo_floor + 1, str(val.mid), dps
                )
        finally:
            iv.dps = old_dps
        dps *= 2
    raise ArithmeticError(
        f"could not certify an integer bracket for p={p} at up to {dps} digits"
    )


# ---------------------------------------------------------------------------
# Scan of all small even orders at the marginal degree 46*delta > 24*n
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScanRow:
    n: int
    delta: int
    N: int
    S: Fraction
    holds: bool

    def csv(self) -> str:
        return f"{self.n},{self.delta},{self.N},{self.S.numerator}/{self.S.denominator},{self.holds}"


@dataclass(frozen=True)
class ScanReport:
    rows: tuple[ScanRow, ...]
    failures: tuple[tuple[int, int], ...]
    strong_failures: tuple[tuple[int, int], ...]
    reported_exception: tuple[int, int] = REPORTED_SCAN_EXCEPTION

    @property
    def matches_reported(self) -> bool:
        return set(self.failures) == {self.reported_exception}

    def csv_lines(self) -> list[str]:
        return ["n,delta,N,S,holds"] + [row.csv() for row in self.rows]


def marginal_degree(n: int) -> int:
    """Smallest integer delta with 46*delta > 24*n (exact, no floats)."""
    return (24 * n) // 46 + 1


def scan_marginal_orders(n_max: int = 1420) -> ScanReport:
    """Check N > S for every even 12 <= n < n_max at the marginal degree.

    Failures are re-tested against the strong bound.  The report carries the
    previously reported exception row for comparison, flagged rather than
    forced: this scan trusts only its own arithmetic.
    """
    rows = []
    failures = []
    strong_failures = []
    for n in range(12, n_max, 2):
        delta = marginal_degree(n)
        N = total_equipartitions(n, delta)
        S = _bad_bound_sum(n, delta, strong=False)
        holds = N > S
        rows.append(ScanRow(n, delta, N, S, holds))
        if not holds:
            failures.append((n, delta))
            if not N > _bad_bound_sum(n, delta, strong=True):
                strong_failures.append((n, delta))
    return ScanReport(tuple(rows), tuple(failures), tuple(strong_failures))


# ---------------------------------------------------------------------------
# Product-ratio inequality and the term-ratio recursion
# ---------------------------------------------------------------------------


def rising_ratio_bound_holds(x: Fraction, y: Fraction, s: int) -> bool:
    """Exact check of x(x+1)...(x+s) / (y(y+1)...(y+s)) >= ((x+s/2)/(y+s/2))^2
    for rationals x >= y > s/2 with s a positive even integer."""
    x, y = Fraction(x), Fraction(y)
    if s <= 0 or s % 2:
        raise ValueError("s must be a positive even integer")
    if not (x >= y and y > Fraction(s, 2)):
        raise ValueError("requires x >= y > s/2 > 0")
    lhs = Fraction(1)
    for j in range(s + 1):
        lhs *= (x + j) / (y + j)
    rhs = ((x + Fraction(s, 2)) / (y + Fraction(s, 2))) ** 2
    return lhs >= rhs


def _ratio_terms(n: int, delta: int, i: int) -> tuple[int, int]:
    # (A_i, B_i): central and tail per-degree counts
    a = equipartition_degree_count(n, delta, delta // 2 + i)
    b = equipartition_degree_count(n, delta, n // 4 - i - 1)
    return a, b


def _validate_ratio_regime(n: int, delta: int, k: int):
    if n % 4 != 0:
        raise ValueError("order must be a multiple of 4")
    if delta % 2 != 0:
        raise ValueError("degree must be even")
    if delta <= n // 2:
        raise ValueError("degree must exceed n/2")
    if not 0 <= k < n // 4 - 3:
        raise ValueError(f"k must lie in 0..{n // 4 - 4}")


def term_ratio_closed_forms(n: int, delta: int, k: int) -> tuple[Fraction, Fraction]:
    """Closed-form successor ratios A_{k+1}/A_k and B_{k+1}/B_k."""
    _validate_ratio_regime(n, delta, k)
    h = delta // 2
    q = n // 4
    ratio_a = Fraction(
        (h - k) * (n // 2 - h - k), (h + k + 1) * (n // 2 - h + k)
    )
    ratio_b = Fraction(
        (q - k - 1) * (3 * n // 4 - delta - k - 2), (delta - q + k + 2) * (q + k + 2)
    )
    return ratio_a, ratio_b


def term_ratio_recursion_holds(n: int, delta: int, k: int) -> bool:
    """Verify the closed-form ratios against the direct binomial values and
    the recursion inequality A_{k+1}/A_k >= ((n/4-k-1)/(n/4-k-2)) B_{k+1}/B_k.

    Ratio equalities are checked cross-multiplied, so zero terms are exact.
    The inequality needs live denominators; rows with A_k = 0 or B_k = 0
    contribute nothing to either side of the count inequality and pass
    vacuously.
    """
    ratio_a, ratio_b = term_ratio_closed_forms(n, delta, k)
    a_k, b_k = _ratio_terms(n, delta, k)
    a_k1, b_k1 = _ratio_terms(n, delta, k + 1)
    if a_k1 * ratio_a.denominator != a_k * ratio_a.numerator:
        return False
    if b_k1 * ratio_b.denominator != b_k * ratio_b.numerator:
        return False
    if a_k == 0 or b_k == 0:
        return True
    q = n // 4
    lhs = Fraction(a_k1, a_k)
    rhs = Fraction(q - k - 1, q - k - 2) * Fraction(b_k1, b_k)
    return lhs >= rhs


def term_ratio_base_holds(n: int, delta: int) -> bool:
    """Base inequality A_0 > n*B_0/(n/4 - 1) of the recursion."""
    _validate_ratio_regime(n, delta, 0)
    a0, b0 = _ratio_terms(n, delta, 0)
    return a0 * (n // 4 - 1) > n * b0


# ---------------------------------------------------------------------------
# Classical sufficient conditions (cheap arithmetic checks, no search)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConditionCheck:
    name: str
    holds: bool
    guarantee: str


@dataclass(frozen=True)
class ConditionsReport:
    n: int
    delta: int
    checks: tuple[ConditionCheck, ...]

    def holds(self, name: str) -> bool:
        for c in self.checks:
            if c.name == name:
                return c.holds
        raise KeyError(name)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "delta": self.delta,
            "conditions": [
                {"name": c.name, "holds": c.holds, "guarantee": c.guarantee}
                for c in self.checks
            ],
        }


def _grant_condition(n: int, delta: int) -> bool:
    # delta >= 2n/3 + sqrt(n ln n), natural log, certified in intervals
    old_dps = iv.dps
    try:
        iv.dps = 40
        while True:
            bound = iv.mpf(2 * n) / 3 + iv.sqrt(iv.mpf(n) * iv.log(n))
            if bound.b <= delta:
                return True
            if bound.a > delta:
                return False
            iv.dps *= 2
    finally:
        iv.dps = old_dps


def classical_conditions(d: Digraph) -> ConditionsReport:
    """Which classical degree conditions the digraph meets, by name."""
    n = d.n
    delta = min_degree(d)
    even = n % 2 == 0
    underlying_min = min(
        (d.out_masks[v] | d.in_masks[v]).bit_count() for v in range(n)
    )
    checks = (
        ConditionCheck(
            "dirac_underlying",
            n >= 3 and 2 * underlying_min >= n,
            "underlying graph has a Hamilton cycle",
        ),
        ConditionCheck(
            "ghouila_houri",
            2 * delta >= n,
            "digraph has a directed Hamilton cycle",
        ),
        ConditionCheck(
            "three_quarters_adhc",
            even and 4 * delta >= 3 * n,
            "digraph has an anti-directed Hamilton cycle",
        ),
        ConditionCheck(
            "grant_adhc",
            even and _grant_condition(n, delta),
            "digraph has an anti-directed Hamilton cycle",
        ),
        ConditionCheck(
            "nine_sixteenths_adhc",
            even and 16 * delta > 9 * n,
            "digraph has an anti-directed Hamilton cycle",
        ),
        ConditionCheck(
            "twenty_four_forty_sixths_adf",
            even and 46 * delta > 24 * n,
            "digraph has an anti-directed 2-factor",
        ),
    )
    return ConditionsReport(n, delta, checks)
