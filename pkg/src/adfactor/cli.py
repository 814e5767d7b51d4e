"""Command-line front end.

Exit codes: decisions map to 0 (yes), 1 (no), 2 (unknown); usage errors exit
64, file and parse errors 65, internal invariant failures 70.  All randomness
flows from --seed (default 0); identical inputs and seeds give byte-identical
output regardless of worker count.
"""
from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from .bipartite import DEFAULT_NODE_BUDGET
from .counting import (
    classical_conditions,
    order_threshold,
    scan_marginal_orders,
    verify_count_inequality,
)
from .generators import (
    complete_digraph,
    cubic_graph,
    random_cubic,
    random_min_degree_digraph,
    split_complete_digraph,
)
from .graphs import GraphFormatError, parse_digraph, parse_simple_graph, serialize_digraph, serialize_simple_graph
from .reduction import (
    coloring_json_dict,
    three_edge_color_direct,
    three_edge_colorable_via_adf,
)
from .solver import (
    InternalInvariantError,
    decide_adf,
    decide_adhc,
    directed_two_factor_exists,
    equipartition_census,
    scan_half_degree_conjecture,
)

EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_INTERNAL = 70


def _emit(payload: dict, pretty: bool):
    if pretty:
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(json.dumps(payload, separators=(",", ":")))


def _read_digraph(f):
    return parse_digraph(f.read())


@click.group()
def cli():
    """Anti-directed 2-factor toolbox."""


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------


@cli.group()
def check():
    """Decide structural properties of a digraph."""


strategy_option = click.option(
    "--strategy",
    type=click.Choice(["exhaustive", "sampled", "auto"]),
    default="auto",
    show_default=True,
)
seed_option = click.option("--seed", type=int, default=0, show_default=True)
samples_option = click.option("--samples", type=int, default=None, help="Sample count for sampled strategy.")
jobs_option = click.option("--jobs", type=int, default=1, show_default=True, help="Worker count; results do not depend on it.")
pretty_option = click.option("--pretty", is_flag=True, help="Indent JSON output.")


@check.command("adf")
@click.argument("graph", type=click.File("r"))
@strategy_option
@seed_option
@samples_option
@jobs_option
@pretty_option
def check_adf(graph, strategy, seed, samples, jobs, pretty):
    """Anti-directed 2-factor existence; prints a certificate."""
    d = _read_digraph(graph)
    cert = decide_adf(d, strategy, samples=samples, seed=seed, jobs=jobs)
    _emit(cert.to_json_dict(), pretty)
    sys.exit(cert.exit_code())


@check.command("adhc")
@click.argument("graph", type=click.File("r"))
@strategy_option
@seed_option
@samples_option
@click.option("--node-budget", type=int, default=DEFAULT_NODE_BUDGET, show_default=True)
@jobs_option
@pretty_option
def check_adhc(graph, strategy, seed, samples, node_budget, jobs, pretty):
    """Anti-directed Hamilton cycle existence; prints a certificate."""
    d = _read_digraph(graph)
    cert = decide_adhc(
        d, strategy, samples=samples, seed=seed, node_budget=node_budget, jobs=jobs
    )
    _emit(cert.to_json_dict(), pretty)
    sys.exit(cert.exit_code())


@check.command("d2f")
@click.argument("graph", type=click.File("r"))
@pretty_option
def check_d2f(graph, pretty):
    """Directed 2-factor existence (exact matching test)."""
    d = _read_digraph(graph)
    exists = directed_two_factor_exists(d)
    _emit({"directed_two_factor": exists}, pretty)
    sys.exit(0 if exists else 1)


@check.command("conditions")
@click.argument("graph", type=click.File("r"))
@pretty_option
def check_conditions(graph, pretty):
    """Which classical degree conditions the digraph meets."""
    d = _read_digraph(graph)
    _emit(classical_conditions(d).to_json_dict(), pretty)


# ---------------------------------------------------------------------------
# census
# ---------------------------------------------------------------------------


@cli.command()
@click.argument("graph", type=click.File("r"))
@click.option(
    "--target",
    type=click.Choice(["two_factor", "hamilton"]),
    default="two_factor",
    show_default=True,
)
@click.option(
    "--mode",
    type=click.Choice(["exhaustive", "sample"]),
    default="exhaustive",
    show_default=True,
)
@samples_option
@seed_option
@jobs_option
@pretty_option
def census(graph, target, mode, samples, seed, jobs, pretty):
    """Count source-set choices that pass the target test."""
    d = _read_digraph(graph)
    report = equipartition_census(
        d, target, mode, samples=samples, seed=seed, jobs=jobs
    )
    _emit(report.to_json_dict(), pretty)


# ---------------------------------------------------------------------------
# reduce
# ---------------------------------------------------------------------------


@cli.group()
def reduce():
    """Reductions between problems."""


@reduce.command("3ec")
@click.argument("graph", type=click.File("r"))
@click.option("--cross-validate", is_flag=True, help="Also run the direct backtracking colorer and compare.")
@pretty_option
def reduce_3ec(graph, cross_validate, pretty):
    """3-edge-colorability of a cubic graph via the doubled digraph."""
    g = parse_simple_graph(graph.read())
    try:
        verdict = three_edge_colorable_via_adf(g)
    except ValueError as e:
        raise click.UsageError(str(e))
    payload = {"three_edge_colorable": verdict}
    if cross_validate:
        coloring = three_edge_color_direct(g)
        direct = coloring is not None
        payload["direct_check"] = direct
        payload["agree"] = verdict == direct
        if coloring is not None:
            payload["coloring"] = coloring_json_dict(g, coloring)
        if verdict is not None and verdict != direct:
            raise InternalInvariantError("reduction disagrees with the direct colorer")
    _emit(payload, pretty)
    if verdict is None:
        sys.exit(2)
    sys.exit(0 if verdict else 1)


# ---------------------------------------------------------------------------
# count
# ---------------------------------------------------------------------------


@cli.group()
def count():
    """Exact counting and thresholds."""


@count.command("verify")
@click.argument("n", type=int)
@click.argument("delta", type=int)
@pretty_option
def count_verify(n, delta, pretty):
    """Exact equipartition totals and the bound verdict for one (n, delta)."""
    try:
        report = verify_count_inequality(n, delta)
    except ValueError as e:
        raise click.UsageError(str(e))
    _emit(report.to_json_dict(), pretty)


@count.command("scan")
@click.option("--nmax", type=int, default=1420, show_default=True)
@jobs_option
def count_scan(nmax, jobs):
    """CSV scan of all even orders at the marginal degree 46*delta > 24*n."""
    report = scan_marginal_orders(nmax)
    for line in report.csv_lines():
        click.echo(line)
    click.echo(f"# failures: {list(report.failures)}", err=True)
    click.echo(f"# failures_with_strong_bound: {list(report.strong_failures)}", err=True)
    click.echo(
        f"# previously_reported_exception: {report.reported_exception} "
        f"(matches: {report.matches_reported})",
        err=True,
    )


@count.command("threshold")
@click.argument("p", type=str)
@click.option(
    "--variant",
    type=click.Choice(["hamilton", "two_factor"]),
    default="two_factor",
    show_default=True,
)
@click.option("--precision", type=int, default=60, show_default=True)
def count_threshold(p, variant, precision):
    """Certified integer bracket for the order threshold at rational p."""
    try:
        num, _, den = p.partition("/")
        frac = Fraction(int(num), int(den)) if den else Fraction(p)
    except (ValueError, ZeroDivisionError):
        raise click.UsageError(f"expected a rational like 24/46, got {p!r}")
    try:
        bracket = order_threshold(frac, variant, precision)
    except ValueError as e:
        raise click.UsageError(str(e))
    click.echo(str(bracket))


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------


@cli.group()
def gen():
    """Write generator graphs to stdout."""


@gen.command("dn")
@click.argument("n", type=int)
def gen_dn(n):
    """Two disjoint complete digraphs on n/2 vertices each."""
    try:
        click.echo(serialize_digraph(split_complete_digraph(n)), nl=False)
    except ValueError as e:
        raise click.UsageError(str(e))


@gen.command("complete")
@click.argument("n", type=int)
def gen_complete(n):
    """Complete digraph (both arcs between every pair)."""
    if n < 1:
        raise click.UsageError("order must be positive")
    click.echo(serialize_digraph(complete_digraph(n)), nl=False)


@gen.command("random")
@click.argument("n", type=int)
@click.argument("delta", type=int)
@seed_option
def gen_random(n, delta, seed):
    """Random digraph with min in/out degree at least DELTA."""
    try:
        click.echo(serialize_digraph(random_min_degree_digraph(n, delta, seed)), nl=False)
    except ValueError as e:
        raise click.UsageError(str(e))


@gen.command("cubic")
@click.argument("name", type=str)
@click.option("--n", "order", type=int, default=10, show_default=True, help="Order for random cubic graphs.")
@seed_option
def gen_cubic(name, order, seed):
    """Named cubic graph, or 'random' for the pairing model."""
    try:
        if name == "random":
            g = random_cubic(order, seed)
        else:
            g = cubic_graph(name)
    except ValueError as e:
        raise click.UsageError(str(e))
    click.echo(serialize_simple_graph(g), nl=False)


# ---------------------------------------------------------------------------
# conjecture
# ---------------------------------------------------------------------------


def _parse_range(spec: str) -> list[int]:
    if ".." in spec:
        lo, _, hi = spec.partition("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(tok) for tok in spec.split(",")]


@cli.group()
def conjecture():
    """Experimental scans."""


@conjecture.command("scan")
@click.option("--n", "n_spec", type=str, default="8..14", show_default=True, help="Even orders, e.g. 8..14 or 6,8,10.")
@click.option("--trials", type=int, default=20, show_default=True)
@seed_option
@jobs_option
@pretty_option
def conjecture_scan(n_spec, trials, seed, jobs, pretty):
    """Search digraphs with min degree >= n/2 for missing 2-factors."""
    try:
        ns = [n for n in _parse_range(n_spec) if n % 2 == 0]
        if not ns:
            raise ValueError(f"no even orders in {n_spec!r}")
        report = scan_half_degree_conjecture(ns, trials, seed, jobs=jobs)
    except ValueError as e:
        raise click.UsageError(str(e))
    _emit(report.to_json_dict(), pretty)


def main(argv=None):
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.UsageError as e:
        click.echo(f"error: {e.format_message()}", err=True)
        sys.exit(EXIT_USAGE)
    except click.ClickException as e:
        e.show()
        sys.exit(EXIT_USAGE)
    except click.Abort:
        sys.exit(EXIT_USAGE)
    except GraphFormatError as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(EXIT_DATA)
    except OSError as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(EXIT_DATA)
    except InternalInvariantError as e:
        click.echo(f"internal error: {e}", err=True)
        sys.exit(EXIT_INTERNAL)
    except ArithmeticError as e:
        click.echo(f"internal error: {e}", err=True)
        sys.exit(EXIT_INTERNAL)


if __name__ == "__main__":
    main()
