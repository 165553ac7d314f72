#!/usr/bin/env python3
"""Command-line interface for burning numbers of Hamming graphs."""

import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional

import click
from dotenv import load_dotenv
from tqdm import tqdm

# Add src to path
sys.path.insert(0, str(Path(__file__).parent / "src"))

from src.bounds.calculators import strongest_volume_bound
from src.bounds.report import BoundsReport, bounds_report
from src.config.settings import settings
from src.construction.plan import (
    ConstructionReport,
    PlanSummary,
    plan,
    verify_plan_analytic,
    verify_plan_exhaustive,
)
from src.exceptions import InputError, ResourceLimitError
from src.graphs.explicit import verify_schedule
from src.graphs.solver import BurningSolver, ExactReport
from src.hamming.params import HammingParams
from src.parsers.edge_list import format_edge_list
from src.parsers.graph_spec import parse_graph_spec

EXIT_FALSIFIED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

logger = logging.getLogger(__name__)


def setup_logging(verbose: bool = False, log_file: Optional[str] = None) -> None:
    """Setup logging configuration; stdout is reserved for results."""
    level = logging.DEBUG if verbose else logging.WARNING
    handlers: list = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=handlers,
        force=True,
    )


@contextmanager
def exit_codes() -> Iterator[None]:
    """Map library errors onto the CLI exit-code contract."""
    try:
        yield
    except (InputError, OSError) as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_USAGE)
    except ResourceLimitError as e:
        click.echo(f"Resource limit: {e}", err=True)
        sys.exit(EXIT_RESOURCE)
    except AssertionError as e:
        logger.error(f"Consistency check failed: {e}")
        click.echo(f"Verification failed: {e}", err=True)
        sys.exit(EXIT_FALSIFIED)
    except KeyboardInterrupt:
        click.echo("\nOperation cancelled by user.", err=True)
        sys.exit(130)


def render_bounds(report: BoundsReport) -> str:
    """Human-readable table for one report."""
    rows = [
        ("H(n,q)", f"H({report.n},{report.q})"),
        ("p", report.p),
        ("upper bound", str(report.upper)),
        ("lower bound (real)", f"{report.lower_real:.4f}"),
        ("lower bound (int)", str(report.lower_int)),
    ]
    if report.alon_exact is not None:
        rows.append(("exact value", str(report.alon_exact)))
    rows.extend(
        [
            ("b*", "n/a" if report.b_star is None else str(report.b_star)),
            ("volume certificate", "ok" if report.volume_certificate_ok else "fails"),
            (
                "tail <= 1/n",
                "n/a" if report.tail_le_inv_n is None else str(report.tail_le_inv_n).lower(),
            ),
            ("volume lower bound", str(strongest_volume_bound(report.n, report.q))),
        ]
    )
    width = max(len(label) for label, _ in rows)
    return "\n".join(f"{label:<{width}}  {value}" for label, value in rows)


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose logging")
def cli(verbose: bool) -> None:
    """Exact burning numbers and bounds for Hamming graphs H(n, q)."""
    load_dotenv()
    setup_logging(verbose, settings.log_file)


@cli.command()
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Word length")
@click.option("--q", "q", type=click.IntRange(min=2), required=True, help="Alphabet size")
@click.option("--json", "as_json", is_flag=True, help="Emit the report as JSON")
def bounds(n: int, q: int, as_json: bool) -> None:
    """Print lower, upper and certified bounds for H(n, q)."""
    with exit_codes():
        report = bounds_report(n, q)
        click.echo(report.model_dump_json() if as_json else render_bounds(report))


@cli.command()
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Word length")
@click.option("--q", "q", type=click.IntRange(min=2), required=True, help="Alphabet size")
@click.option(
    "--verify",
    type=click.Choice(["none", "analytic", "exhaustive"]),
    default="analytic",
    show_default=True,
    help="How to check that the schedule burns every word",
)
def construct(n: int, q: int, verify: str) -> None:
    """Build the constant-word schedule for H(n, q) and check its coverage."""
    with exit_codes():
        construction = plan(HammingParams(n, q))
        report = ConstructionReport(plan=PlanSummary.from_plan(construction), verification=verify)

        if verify == "analytic":
            report.uncovered = verify_plan_analytic(construction)
        elif verify == "exhaustive":
            report.uncovered = verify_plan_exhaustive(construction).uncovered_count
        if report.uncovered is not None:
            report.verified = report.uncovered == 0

        click.echo(report.model_dump_json())
        if report.verified is False:
            logger.error(f"H({n},{q}): {report.uncovered} words left unburned")
            sys.exit(EXIT_FALSIFIED)


@cli.command()
@click.option("--graph", "spec", required=True, help="path:N | cycle:N | complete:N | hamming:N,Q | file:PATH")
@click.option("--limit", type=click.IntRange(min=1), help="Give up once β is known to exceed this")
@click.option("--workers", type=click.IntRange(min=1), help="Processes for branch evaluation")
@click.option("--sequential", is_flag=True, help="Force a single-process search")
@click.option("--time-budget", type=click.FloatRange(min=0, min_open=True), help="Seconds for best-effort runs above the vertex cap")
@click.option("--json", "as_json", is_flag=True, help="Emit the result as JSON")
def exact(
    spec: str,
    limit: Optional[int],
    workers: Optional[int],
    sequential: bool,
    time_budget: Optional[float],
    as_json: bool,
) -> None:
    """Compute the exact burning number of a small graph, with a witness."""
    with exit_codes():
        solver = BurningSolver(time_budget=time_budget, workers=1 if sequential else workers)
        # Best-effort runs may go past the solver cap, never past materialization
        build_cap = solver.vertex_cap if solver.time_budget is None else settings.materialize_cap
        graph = parse_graph_spec(spec, vertex_cap=build_cap)
        result = solver.solve(graph, limit)

        if result.witness is not None and not verify_schedule(graph, result.witness):
            raise AssertionError(f"witness {result.witness.sources} does not burn {spec}")

        report = ExactReport.from_result(spec, graph, result)
        if as_json:
            click.echo(report.model_dump_json())
            return

        click.echo(f"graph: {report.graph}")
        click.echo(f"vertices: {report.vertex_count}")
        if report.exceeds_limit:
            click.echo(f"burning number: > {limit}")
        else:
            click.echo(f"burning number: {report.burning_number}")
            click.echo(f"witness: {' '.join(map(str, report.witness or []))}")
        click.echo(f"sqrt bound: {report.sqrt_bound}")


@cli.command()
@click.option("--q", "q", type=click.IntRange(min=2), required=True, help="Alphabet size")
@click.option("--n-min", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--n-max", type=click.IntRange(min=1), required=True)
@click.option("--json", "as_json", is_flag=True, help="Emit JSON lines")
def sweep(q: int, n_min: int, n_max: int, as_json: bool) -> None:
    """Bounds reports for H(n, q) over a range of n."""
    if n_min > n_max:
        raise click.BadParameter("--n-min must not exceed --n-max")
    with exit_codes():
        progress = tqdm(
            range(n_min, n_max + 1), desc=f"Sweeping q={q}", file=sys.stderr, disable=None
        )
        for n in progress:
            report = bounds_report(n, q)
            if as_json:
                click.echo(report.model_dump_json())
            else:
                click.echo(
                    f"n={n:<5} lower={report.lower_int:<5} upper={report.upper:<5} "
                    f"certificate={'ok' if report.volume_certificate_ok else 'fails'}"
                )


@cli.command()
@click.option("--graph", "spec", required=True, help="Graph spec to materialize")
def export(spec: str) -> None:
    """Write a graph in edge-list format to stdout."""
    with exit_codes():
        graph = parse_graph_spec(spec, vertex_cap=settings.materialize_cap)
        click.echo(format_edge_list(graph), nl=False)


if __name__ == "__main__":
    cli()
