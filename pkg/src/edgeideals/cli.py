"""Command-line front end.

Exit codes: 0 success/PASS, 1 verification FAIL, 2 input error,
3 resource limit, 4 domain error (tuple outside the feasible region).
"""

from __future__ import annotations

import json
import random
import sys

import click

from .betti import betti_table_hochster, invariant_tuple
from .complexes import FieldSpec, SizeLimitError, independence_complex
from .graphs import Graph, from_edges, parse_graph6, to_graph6
from .kernels import TABLE_MAX_N
from .regions import (
    enumerate_cstar,
    enumerate_cstarstar,
    in_cc,
    tuples_to_csv,
    tuples_to_json,
)
from .survey import (
    CorpusError,
    field_robustness,
    property_suite,
    random_connected_graph,
    verify_corollary,
    verify_theorem_main,
)
from .witnesses import OutsideRegionError, witness

EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_LIMIT = 3
EXIT_DOMAIN = 4


def _fail(code: int, message: str):
    click.echo(message, err=True)
    sys.exit(code)


def _parse_field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        _fail(EXIT_INPUT, str(exc))


def _read_edge_file(path: str) -> Graph:
    """One 'u v' pair per line; '#' starts a comment; n is max label + 1."""
    edges = []
    top = -1
    try:
        with open(path, "r", encoding="ascii") as fh:
            for ln, raw in enumerate(fh, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                parts = line.split()
                if len(parts) != 2:
                    raise ValueError(f"line {ln}: expected 'u v', got {line!r}")
                u, v = int(parts[0]), int(parts[1])
                edges.append((u, v))
                top = max(top, u, v)
    except (OSError, ValueError) as exc:
        _fail(EXIT_INPUT, f"cannot read edge list {path}: {exc}")
    return from_edges(top + 1, edges)


def _input_graph(graph6: str | None, edges: str | None) -> Graph:
    if (graph6 is None) == (edges is None):
        _fail(EXIT_INPUT, "supply exactly one of GRAPH6 or --edges FILE")
    if edges is not None:
        return _read_edge_file(edges)
    try:
        return parse_graph6(graph6)
    except ValueError as exc:
        _fail(EXIT_INPUT, f"bad graph6 input: {exc}")


@click.group()
def main():
    """Homological invariants of edge ideals of finite simple graphs."""


@main.command("invariants")
@click.argument("graph6", required=False)
@click.option("--edges", type=click.Path(), help="edge-list file ('u v' per line)")
@click.option("--field", default="q", show_default=True, help="'q' or 'gf:p'")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json", "csv"]),
    default="text",
    show_default=True,
)
@click.option("--betti", is_flag=True, help="also print the Betti table of R/I(G)")
def cmd_invariants(graph6, edges, field, fmt, betti):
    """Compute dim, depth, reg, pd, deg h and graph statistics."""
    g = _input_graph(graph6, edges)
    fld = _parse_field(field)
    try:
        t = invariant_tuple(g, fld)
    except SizeLimitError as exc:
        _fail(EXIT_LIMIT, str(exc))
    row = {
        "n": t.n,
        "dim": t.dim,
        "depth": t.depth,
        "reg": t.reg,
        "pd": t.pd,
        "degh": t.degh,
        "m": t.stats.m,
        "im": t.stats.im,
        "d": t.stats.d,
        "p": t.stats.p,
    }
    if fmt == "json":
        if betti:
            table = betti_table_hochster(independence_complex(g), fld)
            row["betti"] = sorted(
                [i, j, b] for (i, j), b in table.entries
            )
        click.echo(json.dumps(row))
        return
    if fmt == "csv":
        click.echo(",".join(row))
        click.echo(",".join(str(v) for v in row.values()))
    else:
        click.echo(" ".join(f"{k}={v}" for k, v in row.items()))
    if betti and fmt != "json":
        table = betti_table_hochster(independence_complex(g), fld)
        for (i, j), b in sorted(table.entries):
            click.echo(f"beta[{i},{j}] = {b}")


@main.command("witness")
@click.argument("n", type=int)
@click.argument("d", type=int)
@click.argument("p", type=int)
@click.argument("r", type=int)
@click.option("--verify", is_flag=True, help="engine-check the constructed graph")
def cmd_witness(n, d, p, r, verify):
    """Emit a graph on N vertices with (dim, depth, reg) = (D, P, R)."""
    try:
        g = witness(n, d, p, r, validate=verify)
    except OutsideRegionError as exc:
        _fail(EXIT_DOMAIN, f"outside region: {exc}")
    except ValueError as exc:
        _fail(EXIT_INPUT, str(exc))
    line = to_graph6(g)
    if verify:
        line += f"  # verified (dim, depth, reg) = ({d}, {p}, {r})"
    click.echo(line)


@main.command("region")
@click.argument("n", type=int)
@click.option(
    "--variant",
    type=click.Choice(["cstarstar", "cstar", "cc"]),
    default="cstarstar",
    show_default=True,
)
@click.option("--c", "c_param", type=int, default=2, help="parameter for --variant cc")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["csv", "json"]),
    default="csv",
    show_default=True,
)
@click.option("--with-witness", is_flag=True, help="append a witness graph6 per row")
def cmd_region(n, variant, c_param, fmt, with_witness):
    """List the feasible region for N vertices."""
    try:
        if variant == "cstarstar":
            rows = enumerate_cstarstar(n)
        elif variant == "cstar":
            rows = [(d, p) for d, p in enumerate_cstar(n)]
        else:
            rows = [
                (d, p)
                for d in range(1, n)
                for p in range(1, n)
                if in_cc(n, c_param, (d, p))
            ]
    except ValueError as exc:
        _fail(EXIT_DOMAIN, str(exc))
    if variant != "cstarstar":
        if fmt == "json":
            click.echo(json.dumps({"n": n, "tuples": [list(t) for t in rows]}))
        else:
            click.echo("n,d,p")
            for d, p in rows:
                click.echo(f"{n},{d},{p}")
        return
    if with_witness:
        click.echo("n,d,p,r,witness")
        for d, p, r in rows:
            click.echo(f"{n},{d},{p},{r},{to_graph6(witness(n, d, p, r))}")
    elif fmt == "json":
        click.echo(tuples_to_json(n, rows))
    else:
        click.echo(tuples_to_csv(n, rows), nl=False)


@main.command("verify")
@click.argument("n", type=int)
@click.option("--corpus", type=click.Path(), help="graph6 file for n beyond the scan limit")
@click.option("--field", default="gf:2", show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--corollary", is_flag=True, help="check the pair projection instead")
@click.option("--robustness", is_flag=True, help="GF(2)/GF(3)/exact cross-check")
def cmd_verify(n, corpus, field, jobs, corollary, robustness):
    """Survey all connected graphs on N vertices against the region."""
    del jobs  # survey kernels are single-threaded; accepted for CLI stability
    fld = _parse_field(field)
    if corpus is None and n > TABLE_MAX_N:
        _fail(
            EXIT_LIMIT,
            f"built-in enumeration stops at n = {TABLE_MAX_N}; "
            "provide --corpus with a graph6 file",
        )
    try:
        if robustness:
            verdict = field_robustness(n)
        elif corollary:
            verdict = verify_corollary(n, fld, corpus)
        else:
            verdict = verify_theorem_main(n, fld, corpus)
    except CorpusError as exc:
        _fail(EXIT_INPUT, str(exc))
    except SizeLimitError as exc:
        _fail(EXIT_LIMIT, str(exc))
    for line in verdict.report_lines():
        click.echo(line)
    sys.exit(0 if verdict.passed else EXIT_FAIL)


@main.command("check")
@click.argument("graph6", required=False)
@click.option("--edges", type=click.Path(), help="edge-list file")
@click.option("--random", "count", type=int, default=0, help="number of random graphs")
@click.option("--n", "nverts", type=int, default=7, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--field", default="gf:2", show_default=True)
def cmd_check(graph6, edges, count, nverts, seed, field):
    """Run the property-law suite on a graph or a seeded random sample."""
    fld = _parse_field(field)
    if count:
        rng = random.Random(seed)
        graphs = [random_connected_graph(nverts, rng) for _ in range(count)]
    else:
        graphs = [_input_graph(graph6, edges)]
    failed = 0
    for g in graphs:
        try:
            report = property_suite(g, fld)
        except SizeLimitError as exc:
            _fail(EXIT_LIMIT, str(exc))
        if report.passed:
            continue
        failed += 1
        for law in report.failures():
            click.echo(f"FAIL {report.graph6} {law.name}: {law.detail}")
    click.echo(
        f"{len(graphs) - failed}/{len(graphs)} graphs passed all laws"
    )
    sys.exit(EXIT_FAIL if failed else 0)


if __name__ == "__main__":
    main()
