#!/usr/bin/env python3
"""
Phi Bounds - Command-line entry point

Evaluates the closed-form upper bounds of the standard normal CDF against
the reference oracle, regenerates the published error table and re-checks
the headline claims. Machine-readable output goes to stdout, diagnostics
and logs to stderr.
"""

import sys
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import click
from pydantic import BaseModel, ConfigDict, Field, ValidationError
from rich.console import Console

from analysis import (
    CellStatus,
    GraphKind,
    Grid,
    TABLE1_ABSCISSAE,
    check_claims,
    compare_table1,
    crossover_report,
    error_at,
    error_ratio_report,
    graph_series,
    make_table1,
    max_abs_error,
    verify_upper_bound,
)
from bounds import BoundKind, default_registry
from config import configure_logging, defaults
from errors import DomainError, PreconditionError, UnknownBoundError
from formatters import OutputFormat, render_record, render_records, render_rows

console = Console(stderr=True)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


class Command(str, Enum):
    """Subcommands of the front-end."""

    EVAL = "eval"
    TABLE = "table"
    MAXERR = "maxerr"
    VERIFY = "verify"
    CROSSOVER = "crossover"
    RATIO = "ratio"
    SERIES = "series"
    CLAIMS = "claims"


class CliConfig(BaseModel):
    """Validated arguments of one invocation."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    command: Command
    bounds_selection: List[BoundKind] = Field(default_factory=lambda: list(BoundKind))
    grid: Optional[Grid] = None
    format: OutputFormat = OutputFormat.CSV
    x_tolerance: float = Field(defaults.x_tolerance, gt=0.0)
    slack: float = Field(defaults.slack, ge=0.0)

    @classmethod
    def create(cls, **kwargs) -> "CliConfig":
        """Validate arguments, reporting out-of-range values as DomainError."""
        try:
            return cls(**kwargs)
        except ValidationError as e:
            raise DomainError(f"Invalid argument: {e.errors()[0]['msg']}") from e


class ComputationError(click.ClickException):
    """Domain or precondition failure inside a command."""

    exit_code = EXIT_DOMAIN


class BoundKindType(click.ParamType):
    """Bound names resolved through the registry before anything runs."""

    name = "bound"

    def convert(self, value, param, ctx):
        if isinstance(value, BoundKind):
            return value
        try:
            return default_registry.resolve(value)
        except UnknownBoundError as e:
            self.fail(str(e), param, ctx)


class BoundsGroup(click.Group):
    """Group that turns library errors into exit status 3."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (DomainError, PreconditionError) as e:
            raise ComputationError(str(e)) from e


BOUND = BoundKindType()

format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.CSV.value,
    show_default=True,
    help="Output format",
)


def range_options(points_default: int):
    """--from/--to/--points, shared by the grid-driven commands."""

    def decorate(func):
        func = click.option("--points", type=int, default=points_default, show_default=True, help="Grid points")(func)
        func = click.option("--to", "stop", type=float, default=defaults.x_max, show_default=True, help="Upper end")(func)
        func = click.option("--from", "start", type=float, default=0.0, show_default=True, help="Lower end")(func)
        return func

    return decorate


def _emit(text: str) -> None:
    click.echo(text, nl=False)


@click.group(cls=BoundsGroup)
@click.option("--verbose", "-v", is_flag=True, help="Enable debug logging on stderr")
def cli(verbose: bool):
    """
    Phi Bounds - Upper bounds of the standard normal CDF.

    Examples:
        python main.py eval --bound eidous --x 2.9
        python main.py maxerr --bound eidous
        python main.py verify --bound eidous --points 1000000
    """
    configure_logging("DEBUG" if verbose else None)


@cli.command("eval")
@click.option("--bound", "kind", type=BOUND, required=True, help="Bound name")
@click.option("--x", "xs", type=float, multiple=True, required=True, help="Abscissa (repeatable)")
@format_option
def eval_command(kind: BoundKind, xs: Tuple[float, ...], fmt: str):
    """Signed error of one bound at the given abscissae."""
    config = CliConfig.create(command=Command.EVAL, bounds_selection=[kind], format=fmt)
    rows = [error_at(kind, x) for x in xs]
    _emit(render_rows(rows, config.format))
    return EXIT_OK


@cli.command("table")
@click.option("--paper-abscissae/--grid", "paper", default=True, help="Published abscissae, or --from/--to/--points")
@click.option("--bound", "kinds", type=BOUND, multiple=True, help="Restrict columns (repeatable)")
@click.option("--compare", is_flag=True, help="Printed values next to the regenerated ones")
@range_options(points_default=31)
@format_option
def table_command(paper: bool, kinds: Tuple[BoundKind, ...], compare: bool, start: float, stop: float, points: int, fmt: str):
    """Regenerate the error table of all eight bounds."""
    grid = None if paper else Grid.build(start, stop, points)
    config = CliConfig.create(command=Command.TABLE, grid=grid, format=fmt)
    if kinds:
        config.bounds_selection = list(kinds)
    selected = set(config.bounds_selection)

    if compare:
        cells = [c for c in compare_table1() if c.kind in selected]
        records = [c.model_dump() for c in cells]
        fields = ("x", "kind", "computed", "printed", "relative_deviation", "status", "sign_only")
        _emit(render_records(records, fields, config.format))
        counts = {status: sum(1 for c in cells if c.status is status) for status in CellStatus}
        console.print(
            f"[green]{counts[CellStatus.MATCH]} match[/green], "
            f"[red]{counts[CellStatus.MISMATCH]} mismatch[/red], "
            f"[yellow]{counts[CellStatus.EXCLUDED]} excluded[/yellow]"
        )
        return EXIT_OK

    xs = TABLE1_ABSCISSAE if config.grid is None else config.grid.points
    rows = [r for r in make_table1(xs) if r.kind in selected]
    _emit(render_rows(rows, config.format))
    return EXIT_OK


@cli.command("maxerr")
@click.option("--bound", "kind", type=BOUND, required=True, help="Bound name")
@click.option("--from", "start", type=float, default=0.0, show_default=True, help="Lower end")
@click.option("--to", "stop", type=float, default=defaults.x_max, show_default=True, help="Upper end")
@click.option("--tol", type=float, default=defaults.x_tolerance, show_default=True, help="Location tolerance")
@format_option
def maxerr_command(kind: BoundKind, start: float, stop: float, tol: float, fmt: str):
    """Location and value of the maximum absolute error."""
    config = CliConfig.create(command=Command.MAXERR, bounds_selection=[kind], format=fmt, x_tolerance=tol)
    report = max_abs_error(kind, (start, stop), config.x_tolerance)
    _emit(render_record(report.model_dump(), config.format))
    return EXIT_OK


@cli.command("verify")
@click.option("--bound", "kind", type=BOUND, required=True, help="Bound name")
@range_options(points_default=defaults.verify_points)
@click.option("--slack", type=float, default=defaults.slack, show_default=True, help="Allowed negative error")
@format_option
@click.pass_context
def verify_command(ctx: click.Context, kind: BoundKind, start: float, stop: float, points: int, slack: float, fmt: str):
    """Check Phi <= bound on a uniform grid; exit 1 on failure."""
    config = CliConfig.create(
        command=Command.VERIFY,
        bounds_selection=[kind],
        grid=Grid.build(start, stop, points),
        format=fmt,
        slack=slack,
    )
    report = verify_upper_bound(kind, config.grid, config.slack)
    _emit(render_record(report.model_dump(), config.format))
    if not report.passed:
        console.print(f"[red]{kind.value}: min error {report.worst_violation:.3e} at x={report.worst_location}[/red]")
        ctx.exit(EXIT_FAILED)
    return EXIT_OK


@cli.command("crossover")
@format_option
def crossover_command(fmt: str):
    """Exact crossover against Polya, the printed value and the sign-flip checks."""
    config = CliConfig.create(command=Command.CROSSOVER, format=fmt)
    _emit(render_record(crossover_report().model_dump(), config.format))
    return EXIT_OK


@cli.command("ratio")
@format_option
def ratio_command(fmt: str):
    """max|Phi_EI - Phi| / max|Phi*_EI - Phi| over [0, 40]."""
    config = CliConfig.create(command=Command.RATIO, format=fmt)
    report = error_ratio_report()
    record = {
        "ratio": report.ratio,
        "eidous_max": abs(report.numerator.value),
        "eidous_location": report.numerator.location,
        "eidous_star_max": abs(report.denominator.value),
        "eidous_star_location": report.denominator.location,
    }
    _emit(render_record(record, config.format))
    return EXIT_OK


@cli.command("series")
@click.option("--graph", type=click.Choice([g.value for g in GraphKind]), required=True, help="Curve")
@range_options(points_default=1001)
@format_option
def series_command(graph: str, start: float, stop: float, points: int, fmt: str):
    """Data series of h', h or h*."""
    config = CliConfig.create(command=Command.SERIES, grid=Grid.build(start, stop, points), format=fmt)
    records = [{"x": x, "value": v} for x, v in graph_series(GraphKind(graph), config.grid)]
    _emit(render_records(records, ("x", "value"), config.format))
    return EXIT_OK


@cli.command("claims")
@format_option
@click.pass_context
def claims_command(ctx: click.Context, fmt: str):
    """Re-check every headline claim; exit 1 if any fails."""
    config = CliConfig.create(command=Command.CLAIMS, format=fmt)
    results = check_claims()
    records = [r.model_dump() for r in results]
    _emit(render_records(records, ("name", "expected", "observed", "passed"), config.format))
    failed = [r.name for r in results if not r.passed]
    if failed:
        console.print(f"[red]Failed claims: {', '.join(failed)}[/red]")
        ctx.exit(EXIT_FAILED)
    return EXIT_OK


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the command line and return its exit status.

    0 success, 1 failed verification or claim, 2 usage error, 3 domain error.
    """
    try:
        result = cli.main(args=list(argv) if argv is not None else None, prog_name="phibounds", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        console.print("[yellow]Aborted[/yellow]")
        return EXIT_FAILED
    return result if isinstance(result, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(run())
