"""Command-line front end.

Subcommands: stats, convert, enumerate, verify, render, count.
Exit codes: 0 ok, 2 usage or parse failure, 3 domain violation, 4 size cap
exceeded, 5 verification failure.
"""

from __future__ import annotations

import dataclasses
import json
import sys
import time

import click

from . import counting, formats, paths, permstats, polyomino, render as render_mod, routes, verify
from .errors import CapExceededError, DomainError, ParseError

SCHEMA = "bijection-atlas/1"

EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_CAP = 4
EXIT_VERIFY = 5


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _json_dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _input_options(fn):
    for kind in reversed(formats.KINDS):
        fn = click.option(f"--{kind}", f"in_{kind}", default=None, help=f"{kind} payload")(fn)
    return fn


def _read_object(kwargs) -> tuple[str, object]:
    given = [(kind, kwargs[f"in_{kind}"]) for kind in formats.KINDS if kwargs[f"in_{kind}"] is not None]
    if len(given) != 1:
        _fail(EXIT_PARSE, "exactly one input object option is required "
              f"(one of {', '.join('--' + k for k in formats.KINDS)})")
    kind, payload = given[0]
    try:
        return kind, formats.parse(kind, payload)
    except ParseError as exc:
        _fail(EXIT_PARSE, str(exc))


@click.group()
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "text"]), default="text",
              help="output format where applicable")
@click.option("--timestamp", is_flag=True, default=False,
              help="include a timestamp line in reports")
@click.pass_context
def main(ctx: click.Context, fmt: str, timestamp: bool) -> None:
    """Statistics, bijections, enumeration, and machine verification for
    bi-increasing (321-avoiding) permutations and their partner objects."""
    ctx.obj = {"format": fmt, "timestamp": timestamp}


@main.command("stats")
@_input_options
@click.pass_context
def cmd_stats(ctx: click.Context, **kwargs) -> None:
    """Print the statistics of one object."""
    kind, obj = _read_object(kwargs)
    record: dict = {"schema": SCHEMA, "kind": kind, "input": formats.serialize(obj)}
    if kind == "perm":
        bundle = permstats.stats(obj)
        record.update(dataclasses.asdict(bundle))
        record["excedance_set"] = list(bundle.excedance_set)
        record["descent_set"] = list(bundle.descent_set)
        record["fixed_point_set"] = list(bundle.fixed_point_set)
        record["excedance_letters"] = list(bundle.excedance_letters)
        record["n"] = obj.n
        record["bi_increasing"] = permstats.is_bi_increasing(obj)
    elif kind in ("step", "parallelogram"):
        pp = polyomino.step_to_parallelogram(obj) if kind == "step" else obj
        metrics = polyomino.polyomino_metrics(pp)
        if kind == "step":
            record["step_area"] = obj.area
            record["step_height"] = obj.height
        record.update(dataclasses.asdict(metrics))
        record["column_heights"] = list(metrics.column_heights)
        record["row_lengths"] = list(metrics.row_lengths)
        record["diagonal_lengths"] = list(metrics.diagonal_lengths)
    elif kind == "skew":
        record["connected"] = obj.is_connected
        record["perimeter"] = obj.perimeter
        record["cells"] = len(obj.cells())
        if obj.is_connected:
            record["rank"] = polyomino.rank(obj)
    elif kind == "staircase":
        record["n"] = obj.n
        record["cells"] = sum(obj.parts)
        record["corners"] = [list(c) for c in obj.corners()]
    elif kind == "dyck":
        record["length"] = len(obj)
        record["peak_heights"] = obj.peak_heights()
        record["valley_heights"] = obj.valley_heights()
    else:
        st = paths.path_stats(obj)
        record.update(dataclasses.asdict(st))
        record["length"] = len(obj)
        record["in_m_star"] = obj.in_m_star
    if ctx.obj["format"] == "json":
        click.echo(_json_dump(record))
    else:
        for key in sorted(record):
            click.echo(f"{key}: {record[key]}")


@main.command("convert")
@_input_options
@click.option("--to", "target", type=click.Choice(formats.KINDS), required=True)
@click.option("--route", "route_text", default=None,
              help="comma-separated edge names, composed left to right")
@click.pass_context
def cmd_convert(ctx: click.Context, target: str, route_text: str | None, **kwargs) -> None:
    """Convert an object along named bijection edges."""
    kind, obj = _read_object(kwargs)
    try:
        if route_text is None:
            names = routes.default_route(kind, target)
        else:
            names = [tok.strip() for tok in route_text.split(",") if tok.strip()]
        obj, kind = routes.apply_route(obj, kind, names)
    except DomainError as exc:
        _fail(EXIT_DOMAIN, str(exc))
    if kind != target:
        _fail(EXIT_DOMAIN, f"route ends at kind {kind!r}, not {target!r}")
    payload = formats.serialize(obj)
    if ctx.obj["format"] == "json":
        click.echo(_json_dump({"schema": SCHEMA, "kind": kind, "payload": payload}))
    else:
        click.echo(payload)


@main.command("enumerate")
@click.option("--family", type=click.Choice(["S", "B"], case_sensitive=False), required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--stat", "stat_text", required=True,
              help="statistic name, or two names separated by a comma")
@click.option("--force", is_flag=True, default=False, help="override the size cap")
@click.option("--jobs", type=int, default=1)
@click.pass_context
def cmd_enumerate(ctx: click.Context, family: str, n: int, stat_text: str, force: bool, jobs: int) -> None:
    """Exhaustive distribution table of one or two statistics."""
    names = tuple(tok.strip() for tok in stat_text.split(",") if tok.strip())
    try:
        table = counting.distribution(family.upper(), n, names, force=force, jobs=jobs)
    except CapExceededError as exc:
        _fail(EXIT_CAP, f"{exc}; pass --force to override")
    except ValueError as exc:
        _fail(EXIT_PARSE, str(exc))
    fmt = ctx.obj["format"]
    if fmt == "json":
        obj = {"schema": SCHEMA}
        obj.update(table.to_json_obj())
        click.echo(_json_dump(obj))
    elif fmt == "csv":
        click.echo(table.to_csv(), nl=False)
    else:
        for key, cnt in table.items_sorted():
            click.echo(f"{' '.join(str(v) for v in key)}: {cnt}")


@main.command("verify")
@click.option("--suite", "suite_name", default="all",
              help="suite name or 'all'; see --list")
@click.option("--nmax", type=int, default=None, help="lower the exhaustive size ceilings")
@click.option("--jobs", type=int, default=1)
@click.option("--list", "list_suites", is_flag=True, default=False, help="list suite names")
@click.pass_context
def cmd_verify(ctx: click.Context, suite_name: str, nmax: int | None, jobs: int, list_suites: bool) -> None:
    """Run the exhaustive verification suites and report per-statement
    pass/fail lines."""
    if list_suites:
        for name in verify.suite_names():
            click.echo(name)
        return
    names = list(verify.suite_names()) if suite_name == "all" else [suite_name]
    unknown = [x for x in names if x not in verify.SUITES]
    if unknown:
        _fail(EXIT_PARSE, f"unknown suite {unknown[0]!r}; known suites: "
              f"{', '.join(verify.suite_names())} or 'all'")
    t0 = time.time()
    all_ok = True
    for name in names:
        result = verify.run_suite(name, nmax=nmax, jobs=jobs)
        status = "pass" if result.passed else "FAIL"
        click.echo(f"{name}: {status}  [{result.description}]")
        for check in result.checks:
            mark = "ok" if check.passed else "FAIL"
            line = f"  {check.name}: {mark}"
            if not check.passed and check.detail:
                line += f"  ({check.detail})"
            click.echo(line)
        all_ok = all_ok and result.passed
    if ctx.obj["timestamp"]:
        click.echo(f"elapsed: {time.time() - t0:.2f}s")
    if not all_ok:
        sys.exit(EXIT_VERIFY)


@main.command("render")
@_input_options
@click.pass_context
def cmd_render(ctx: click.Context, **kwargs) -> None:
    """ASCII picture of one object."""
    _, obj = _read_object(kwargs)
    click.echo(render_mod.render(obj))


_COUNTERS = {
    "catalan": (counting.catalan, 1),
    "narayana": (counting.narayana, 2),
    "motzkin": (counting.motzkin, 1),
    "fine": (counting.fine, 1),
    "m": (counting.m_nk, 2),
    "greatest-excedance": (counting.greatest_excedance_count, 2),
    "partitions-by-rank": (counting.partitions_by_rank, 2),
    "skew-by-rank": (counting.skew_by_rank, 2),
    "a": (counting.a_k_sequence, 2),
}


@main.command("count")
@click.argument("name")
@click.argument("args", nargs=-1)
@click.pass_context
def cmd_count(ctx: click.Context, name: str, args: tuple[str, ...]) -> None:
    """Evaluate a counting formula.

    NAME is one of catalan, narayana, motzkin, fine, m, greatest-excedance,
    partitions-by-rank, skew-by-rank, a, fixed-point-set, j-series.
    """
    fmt = ctx.obj["format"]
    if name == "fixed-point-set":
        if len(args) not in (1, 2):
            _fail(EXIT_PARSE, "usage: count fixed-point-set N [i1,i2,...]")
        n = int(args[0])
        fset = [int(tok) for tok in args[1].split(",")] if len(args) == 2 and args[1] else []
        value = counting.fixed_point_set_count(n, fset)
    elif name == "j-series":
        if len(args) != 3:
            _fail(EXIT_PARSE, "usage: count j-series R MAX_X MAX_Q")
        series = counting.j_series(int(args[0]), int(args[1]), int(args[2]))
        obj = {"schema": SCHEMA}
        obj.update(series.to_json_obj())
        click.echo(_json_dump(obj))
        return
    elif name in _COUNTERS:
        fn, arity = _COUNTERS[name]
        if len(args) != arity:
            _fail(EXIT_PARSE, f"count {name} takes {arity} integer argument(s)")
        try:
            value = fn(*(int(a) for a in args))
        except ValueError as exc:
            _fail(EXIT_PARSE, str(exc))
    else:
        _fail(EXIT_PARSE, f"unknown counter {name!r}")
    if fmt == "json":
        click.echo(_json_dump({"schema": SCHEMA, "name": name,
                               "args": [int(a) if "," not in a else a for a in args],
                               "value": value}))
    else:
        click.echo(str(value))


if __name__ == "__main__":
    main()
