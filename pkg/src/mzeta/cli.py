"""Command-line interface for mzeta.

Usage:
    mzeta eval zeta2 --args 2,2 --method integral
    mzeta eval hurwitz --args 2,1
    mzeta verify theorem1 --grid default
    mzeta verify all --format csv
    mzeta table zeta2 --s1 1:3:0.5 --s2 1.5:6:0.5 --format csv -o grid.csv

Exit codes: 0 ok, 1 verification failure, 2 domain error, 3 accuracy
failure, 64 usage error, 74 I/O error.
"""

from __future__ import annotations

import csv
import inspect
import io
import itertools
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import click

from .config import AccuracyError, DomainError, EvaluationConfig, MZetaError
from .hurwitz import hurwitz_zeta_estimate
from .identities import (
    SUITE_NAMES,
    SUITES,
    suite_jobs,
    zeta2_integral_result,
    zeta2_smooth_approx,
    zeta3_terms_estimate,
)
from .report import FIELDS
from .series import tornheim_series_estimate, zeta2_series_estimate, zeta3_series_estimate
from .summation import fsum

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_DOMAIN = 2
EXIT_ACCURACY = 3
EXIT_USAGE = 64
EXIT_IO = 74

# Parameter names per function; the length fixes the arity.
ARGUMENTS = {
    "zeta": ("s",),
    "hurwitz": ("s", "alpha"),
    "zeta2": ("s1", "s2"),
    "zeta3": ("s1", "s2", "s3"),
    "tornheim": ("s1", "s2", "s3"),
}
METHODS = {
    "zeta": ("series",),
    "hurwitz": ("series",),
    "zeta2": ("series", "integral", "approx"),
    "zeta3": ("series", "integral"),
    "tornheim": ("series",),
}
PROVENANCE = {
    ("zeta", "series"): "Euler-Maclaurin",
    ("hurwitz", "series"): "Euler-Maclaurin",
    ("zeta2", "series"): "double series with asymptotic tail",
    ("zeta2", "integral"): "s1 * int zeta(s1+1,u) zeta(s2,[u]+1) du",
    ("zeta2", "approx"): "smooth approximation s1 * int zeta(s1+1,u) zeta(s2,u) du",
    ("zeta3", "series"): "nested series with asymptotic tail",
    ("zeta3", "integral"): "eight-term integral decomposition",
    ("tornheim", "series"): "strip sums plus far-quadrant integral",
}
TABLE_FIELDS = ("function", "method", "args", "value", "error", "status")


@dataclass(frozen=True)
class Evaluation:
    function: str
    method: str
    args: tuple[float, ...]
    value: float
    error: float

    @property
    def provenance(self) -> str:
        return PROVENANCE[self.function, self.method]

    def to_dict(self) -> dict:
        return {
            "function": self.function,
            "method": self.method,
            "args": list(self.args),
            "value": self.value,
            "error": self.error,
            "provenance": self.provenance,
        }


def evaluate(function: str, args, method: str = "series", cfg: EvaluationConfig | None = None) -> Evaluation:
    """Evaluate ``function`` at ``args`` by ``method``; returns value and error bound.

    >>> ev = evaluate("hurwitz", (2.0, 1.0))
    >>> round(ev.value, 10)
    1.6449340668
    """
    args = tuple(float(a) for a in args)
    if function not in ARGUMENTS:
        raise click.BadParameter(f"unknown function {function!r}")
    if len(args) != len(ARGUMENTS[function]):
        names = ",".join(ARGUMENTS[function])
        raise click.BadParameter(f"{function} takes {len(ARGUMENTS[function])} arguments ({names})")
    if method not in METHODS[function]:
        raise click.BadParameter(
            f"method {method!r} is not available for {function}; choose from {', '.join(METHODS[function])}"
        )

    if function == "zeta":
        value, err = hurwitz_zeta_estimate(args[0], 1.0, cfg)
    elif function == "hurwitz":
        value, err = hurwitz_zeta_estimate(args[0], args[1], cfg)
    elif function == "tornheim":
        est = tornheim_series_estimate(*args, cfg=cfg)
        value, err = est.value, est.error
    elif method == "series":
        est = (zeta2_series_estimate if function == "zeta2" else zeta3_series_estimate)(*args, cfg=cfg)
        value, err = est.value, est.error
    elif function == "zeta2" and method == "integral":
        res = zeta2_integral_result(*args, cfg=cfg)
        value, err = args[0] * res.value, args[0] * res.total_error
    elif function == "zeta2":
        sa = zeta2_smooth_approx(*args, cfg=cfg)
        value, err = sa.approx, sa.error
    else:
        terms, err = zeta3_terms_estimate(*args, cfg=cfg)
        value = fsum(terms.values())
    return Evaluation(function, method, args, float(value), float(err))


def parse_tuple(text: str) -> tuple[float, ...]:
    """Parse ``"2,3.5"`` into floats.

    >>> parse_tuple("2, 3.5")
    (2.0, 3.5)
    """
    try:
        values = tuple(float(p) for p in text.split(","))
    except ValueError:
        raise click.BadParameter(f"malformed argument list {text!r}") from None
    if not all(math.isfinite(v) for v in values):
        raise click.BadParameter(f"arguments must be finite, got {text!r}")
    return values


def parse_points(text: str) -> list[tuple[float, ...]]:
    """Parse semicolon-separated tuples such as ``"2,2,2;2,3,2"``.

    >>> parse_points("2,2;3,6")
    [(2.0, 2.0), (3.0, 6.0)]
    """
    points = [parse_tuple(chunk) for chunk in text.split(";") if chunk.strip()]
    if not points:
        raise click.BadParameter("empty grid")
    if len({len(p) for p in points}) != 1:
        raise click.BadParameter("all grid points need the same number of arguments")
    return points


def parse_range(text: str) -> list[float]:
    """Expand ``start:stop:step`` (stop included within rounding) or a single value.

    >>> parse_range("1:3:0.5")
    [1.0, 1.5, 2.0, 2.5, 3.0]
    >>> parse_range("2")
    [2.0]
    """
    parts = text.split(":")
    try:
        numbers = [float(p) for p in parts]
    except ValueError:
        raise click.BadParameter(f"malformed range {text!r}") from None
    if len(numbers) == 1:
        return numbers
    if len(numbers) != 3:
        raise click.BadParameter(f"range must be start:stop:step, got {text!r}")
    start, stop, step = numbers
    if not all(math.isfinite(v) for v in numbers) or step <= 0 or stop < start:
        raise click.BadParameter(f"range needs finite start <= stop and step > 0, got {text!r}")
    count = math.floor((stop - start) / step + 1e-9) + 1
    # Rounding keeps 0.1-style steps from producing 1.2000000000000002.
    return [round(start + i * step, 12) for i in range(count)]


def grid_points(grid: str | None, ranges: list[str | None]) -> list[tuple[float, ...]] | None:
    """Explicit tuples from ``--grid`` or the product of per-argument ranges."""
    given = [r for r in ranges if r is not None]
    if grid not in (None, "default") and given:
        raise click.UsageError("use either --grid or per-argument ranges, not both")
    if grid not in (None, "default"):
        return parse_points(grid)
    if not given:
        return None
    if any(r is None for r in ranges[: len(given)]):
        raise click.UsageError("per-argument ranges must be given in order (--s1, --s2, ...)")
    return list(itertools.product(*(parse_range(r) for r in given)))


def _arity(check) -> int:
    """Number of point coordinates a check takes (positional parameters before ``cfg``)."""
    params = list(inspect.signature(check).parameters)
    return params.index("cfg")


def _fmt(value: float) -> str:
    return format(value, ".17g")


def _threads(requested: int) -> int:
    return requested if requested > 0 else (os.cpu_count() or 1)


def _map(ctx_obj, fn, items):
    """Ordered parallel map; results follow input order regardless of completion."""
    workers = min(_threads(ctx_obj["threads"]), max(1, len(items)))
    if workers == 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def reports_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS)
    for rep in reports:
        d = rep.to_dict()
        writer.writerow(
            [
                d["identity"],
                ";".join(_fmt(a) for a in d["args"]),
                _fmt(d["lhs"]),
                _fmt(d["rhs"]),
                _fmt(d["abs_err"]),
                _fmt(d["rel_err"]),
                _fmt(d["tol"]),
                "true" if d["passed"] else "false",
                json.dumps(d["detail"]),
                json.dumps(d["checks"]),
            ]
        )
    return buf.getvalue()


def _table_cell(function: str, method: str, args, cfg) -> dict:
    row = {"function": function, "method": method, "args": [float(a) for a in args]}
    try:
        ev = evaluate(function, args, method, cfg)
    except DomainError:
        return dict(row, value=None, error=None, status="domain_error")
    except AccuracyError:
        return dict(row, value=None, error=None, status="accuracy_error")
    return dict(row, value=ev.value, error=ev.error, status="ok")


def table_text(rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TABLE_FIELDS)
    for row in rows:
        writer.writerow(
            [
                row["function"],
                row["method"],
                ";".join(_fmt(a) for a in row["args"]),
                "" if row["value"] is None else _fmt(row["value"]),
                "" if row["error"] is None else _fmt(row["error"]),
                row["status"],
            ]
        )
    return buf.getvalue()


@click.group()
@click.option("--tol", type=float, default=1e-12, show_default=True, envvar="MZETA_TOL",
              help="Relative tolerance for Hurwitz evaluations.")
@click.option("--quad-order", type=int, default=20, show_default=True, envvar="MZETA_QUAD_ORDER",
              help="Gauss-Legendre nodes per unit segment.")
@click.option("--max-segments", type=int, default=4096, show_default=True, envvar="MZETA_MAX_SEGMENTS",
              help="Cap on unit segments before the asymptotic tail.")
@click.option("--threads", type=click.IntRange(min=0), default=1, show_default=True, envvar="MZETA_THREADS",
              help="Worker threads for grid commands (0 = one per CPU).")
@click.version_option(package_name="mzeta")
@click.pass_context
def cli(ctx, tol, quad_order, max_segments, threads):
    """Hurwitz, multiple and Tornheim zeta values for real arguments."""
    try:
        cfg = EvaluationConfig(rel_tol=tol, quad_order=quad_order, max_segments=max_segments)
    except DomainError as exc:
        raise click.BadParameter(str(exc)) from None
    ctx.obj = {"cfg": cfg, "threads": threads}


@cli.command("eval")
@click.argument("function", type=click.Choice(sorted(ARGUMENTS)))
@click.option("--args", "arg_text", required=True, help="Comma-separated arguments, e.g. 2,3.")
@click.option("--method", type=click.Choice(["series", "integral", "approx"]), default="series",
              show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.pass_obj
def eval_cmd(obj, function, arg_text, method, fmt):
    """Evaluate FUNCTION at one point and print value, error bound and method."""
    ev = evaluate(function, parse_tuple(arg_text), method, obj["cfg"])
    if fmt == "json":
        click.echo(json.dumps(ev.to_dict()))
    else:
        click.echo(f"{_fmt(ev.value)} ± {ev.error:.2e}  [{function} via {method}: {ev.provenance}]")


@cli.command("verify")
@click.argument("suite", type=click.Choice(SUITE_NAMES))
@click.option("--grid", default=None, help='"default" or explicit tuples such as "2,3;3,6".')
@click.option("--s1", default=None, help="Range start:stop:step for the first argument.")
@click.option("--s2", default=None, help="Range for the second argument.")
@click.option("--s3", default=None, help="Range for the third argument.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.pass_context
def verify_cmd(ctx, suite, grid, s1, s2, s3, fmt):
    """Run an identity SUITE; one report per grid point, exit 1 if any fails."""
    obj = ctx.obj
    points = grid_points(grid, [s1, s2, s3])
    if points is not None:
        if suite == "all" or len(SUITES[suite]) != 1:
            raise click.BadParameter(f"suite {suite!r} only runs on its default grid", param_hint="--grid")
        arity = _arity(SUITES[suite][0][0])
        if any(len(p) != arity for p in points):
            raise click.BadParameter(f"suite {suite!r} takes {arity} arguments per grid point")
    jobs = suite_jobs(suite, points)
    cfg = obj["cfg"]
    reports = _map(obj, lambda job: job[0](*job[1], cfg=cfg), jobs)
    if fmt == "csv":
        click.echo(reports_csv(reports), nl=False)
    else:
        for rep in reports:
            click.echo(rep.to_json())
    if not all(rep.ok for rep in reports):
        ctx.exit(EXIT_FAILED)


@cli.command("table")
@click.argument("function", type=click.Choice(sorted(ARGUMENTS)))
@click.option("--grid", default=None, help='Explicit tuples such as "2,2,2;2,3,2".')
@click.option("--s1", default=None, help="Range start:stop:step for the first argument.")
@click.option("--s2", default=None, help="Range for the second argument.")
@click.option("--s3", default=None, help="Range for the third argument.")
@click.option("--method", type=click.Choice(["series", "integral", "approx"]), default="series",
              show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None,
              help="Write to this file instead of stdout.")
@click.pass_obj
def table_cmd(obj, function, grid, s1, s2, s3, method, fmt, output):
    """Tabulate FUNCTION over a grid with a per-cell error bound and status."""
    points = grid_points(grid, [s1, s2, s3])
    if points is None:
        raise click.UsageError("table needs --grid or per-argument ranges")
    arity = len(ARGUMENTS[function])
    if any(len(p) != arity for p in points):
        raise click.BadParameter(f"{function} takes {arity} arguments per grid point")
    if method not in METHODS[function]:
        raise click.BadParameter(f"method {method!r} is not available for {function}")
    cfg = obj["cfg"]
    rows = _map(obj, lambda p: _table_cell(function, method, p, cfg), points)
    text = table_text(rows, fmt)
    if output is None:
        click.echo(text, nl=False)
    else:
        with open(output, "w", newline="") as fh:
            fh.write(text)


def main(argv: list[str] | None = None) -> int:
    """Entry point that maps failures onto the documented exit codes."""
    try:
        rv = cli.main(args=argv, prog_name="mzeta", standalone_mode=False)
    except click.UsageError as exc:
        exc.show()
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.Abort:
        click.echo("aborted", err=True)
        return EXIT_FAILED
    except DomainError as exc:
        click.echo(f"domain error: {exc}", err=True)
        return EXIT_DOMAIN
    except AccuracyError as exc:
        click.echo(f"accuracy failure: {exc}", err=True)
        return EXIT_ACCURACY
    except MZetaError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_ACCURACY
    except OSError as exc:
        click.echo(f"I/O error: {exc}", err=True)
        return EXIT_IO
    return rv if isinstance(rv, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
