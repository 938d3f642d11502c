"""
Command-line interface.

Every subcommand writes one artifact, to ``--out`` (atomically) or to
stdout. Usage errors exit with status 2 and domain errors with status 1;
either way the error name is printed on stderr.
"""

import logging
from typing import Any, Callable, Dict, Optional, Tuple

import click

from echoloc import config, consts
from echoloc.controllers import counting, graphs, location, traces
from echoloc.domain import GraphOperator, RunConfig, parse_point
from echoloc.errors import EcholocError, ValidationError
from echoloc.factory import build_run_config, configure_logging
from echoloc.serialize import get_serializer
from echoloc.utils import atomic_write

logger = logging.getLogger(__name__)

USAGE_ERROR = 2
DOMAIN_ERROR = 1


def _point(ctx: click.Context, param: click.Parameter,
           value: Optional[str]) -> Optional[Tuple[float, ...]]:
    if value is None:
        return None
    try:
        return parse_point(value)
    except ValidationError as e:
        raise click.BadParameter(e.message)


RUN_OPTIONS = (
    click.option("--model", "-m", help="Model spec, e.g. square or "
                 "rect:b=0.5,bc=neumann."),
    click.option("--point", "-x", callback=_point,
                 help="Comma-separated chart coordinates."),
    click.option("--cutoff", "-L", type=float, help="Largest frequency."),
    click.option("--out", "-o", type=click.Path(dir_okay=False),
                 help="Output path; stdout when omitted."),
    click.option("--format", "fmt", type=click.Choice(consts.FORMATS),
                 help="Output format."),
    click.option("--config", "config_file",
                 type=click.Path(exists=True, dir_okay=False),
                 help="File of key = value settings."),
    click.option("--threads", type=click.IntRange(min=1),
                 envvar="ECHOLOC_THREADS", help="Worker threads."),
    click.option("--frequency-tol", type=float,
                 help="Slack when matching frequencies."),
    click.option("--weight-tol", type=float,
                 help="Slack when matching weights."),
    click.option("--cluster-tol", type=float),
    click.option("--acceptance-residual", type=float),
    click.option("--generic-acceptance-residual", type=float),
    click.option("--seed", type=int, help="Seed of random graph samples."),
)


def run_options(func: Callable) -> Callable:
    """Attach the options shared by every subcommand."""
    for option in reversed(RUN_OPTIONS):
        func = option(func)
    return func


def execute(
    subcommand: str,
    settings: Dict[str, Any],
    produce: Callable[[RunConfig], Any],
) -> None:
    """Build the run, call its controller and emit the artifact."""
    try:
        config_file = settings.pop("config_file", None)
        run = build_run_config(subcommand, config_file, settings)
        payload = produce(run)
        text = get_serializer(run.fmt).serialize(payload)
    except ValidationError as e:
        logger.debug("%s failed", subcommand, exc_info=True)
        click.echo(f"{e.name}: {e.message}", err=True)
        raise click.exceptions.Exit(USAGE_ERROR)
    except EcholocError as e:
        logger.debug("%s failed", subcommand, exc_info=True)
        click.echo(f"{e.name}: {e.message}", err=True)
        raise click.exceptions.Exit(DOMAIN_ERROR)
    if run.out:
        with atomic_write(run.out) as f:
            f.write(text)
        logger.debug("wrote %s", run.out)
    else:
        click.echo(text, nl=False)


@click.group()
@click.version_option(config.APP_VERSION, prog_name="echoloc")
@click.option("--log-level", help="Logging level name or number.")
def cli(log_level: Optional[str]) -> None:
    """Pointwise counting functions and echolocation."""
    configure_logging(log_level)


@cli.command()
@run_options
def spectrum(**settings: Any) -> None:
    """List the distinct frequencies of a model up to the cutoff."""
    execute("spectrum", settings, counting.spectrum)


@cli.command()
@run_options
@click.option("--compare-to", type=click.Path(exists=True, dir_okay=False),
              help="Counting function artifact to compare against.")
def count(compare_to: Optional[str], **settings: Any) -> None:
    """Compute the pointwise counting function at a point."""
    if compare_to is None:
        execute("count", settings, counting.count)
        return
    target = compare_to
    execute("count", settings, lambda run: counting.compare_to(run, target))


@cli.command()
@run_options
def timbre(**settings: Any) -> None:
    """Compute the timbre (root jumps) at a point."""
    execute("timbre", settings, counting.timbre)


@cli.command()
@run_options
@click.option("--second-point", "-y", "second_point", callback=_point,
              required=True, help="The other point of the sum.")
def kuznecov2(second_point: Tuple[float, ...], **settings: Any) -> None:
    """Compute the two-point counting function of two points."""
    execute("kuznecov2", settings,
            lambda run: counting.kuznecov2(run, second_point))


@cli.command()
@run_options
@click.option("--t", "times", type=float, multiple=True, required=True,
              help="Time; repeat for several.")
@click.option("--half-laplacian", is_flag=True,
              help="Use exp(-t lambda^2 / 2).")
@click.option("--target", type=click.Path(exists=True, dir_okay=False),
              help="Counting function artifact to transform.")
def heat(times: Tuple[float, ...], half_laplacian: bool,
         target: Optional[str], **settings: Any) -> None:
    """Evaluate the pointwise heat trace."""
    execute("heat", settings,
            lambda run: traces.heat(run, times, half_laplacian, target))


@cli.command()
@run_options
@click.option("--t", "schedule", type=float, multiple=True,
              help="Extrapolation time; repeat for several.")
def curvature(schedule: Tuple[float, ...], **settings: Any) -> None:
    """Estimate the scalar curvature at a point from heat traces."""
    execute("curvature", settings,
            lambda run: traces.curvature(run, schedule))


@cli.command()
@run_options
@click.option("--t-min", type=float, default=0.0, show_default=True)
@click.option("--t-max", type=float, required=True)
@click.option("--step", type=float, default=0.005, show_default=True)
@click.option("--sigma", type=float, help="Smoothing width in frequency.")
@click.option("--threshold", type=float, default=config.LOOPING_THRESHOLD,
              show_default=True, help="Relative height of reported peaks.")
@click.option("--target", type=click.Path(exists=True, dir_okay=False),
              help="Counting function artifact to transform.")
def wave(t_min: float, t_max: float, step: float, sigma: Optional[float],
         threshold: float, target: Optional[str], **settings: Any) -> None:
    """Evaluate the smoothed wave trace and its looping times."""
    execute("wave", settings, lambda run: traces.wave(
        run, t_min, t_max, step, sigma, threshold, target
    ))


@cli.command()
@run_options
@click.option("--target", type=click.Path(exists=True, dir_okay=False),
              required=True, help="Counting function artifact to locate.")
@click.option("--grid-resolution", type=click.IntRange(min=2),
              help="Points per axis of the coarse scan.")
def locate(target: str, grid_resolution: Optional[int],
           **settings: Any) -> None:
    """Recover a point, up to isometry, from its counting function."""
    execute("locate", settings,
            lambda run: location.locate(run, target, grid_resolution))


@cli.command()
@run_options
@click.option("--input", "source",
              type=click.Path(exists=True, dir_okay=False),
              help="graph6 lines or an edge list.")
@click.option("--random", "sample_size", type=click.IntRange(min=1),
              help="Sample this many connected random graphs instead.")
@click.option("--order", type=click.IntRange(min=2), default=8,
              show_default=True, help="Vertices of each random graph.")
@click.option("--operator", type=click.Choice([o.value for o in
                                               GraphOperator]),
              default=GraphOperator.normalized_laplacian.value,
              show_default=True)
@click.option("--find-failures", is_flag=True,
              help="Report graphs with non-similar cospectral vertices.")
@click.option("--vertex", type=click.IntRange(min=0),
              help="Only this vertex.")
def graph(source: Optional[str], sample_size: Optional[int], order: int,
          operator: str, find_failures: bool, vertex: Optional[int],
          **settings: Any) -> None:
    """Vertex counting functions and echolocation failures of graphs."""
    sample = None if sample_size is None else (sample_size, order)
    execute("graph", settings, lambda run: graphs.graph(
        run, source, GraphOperator(operator), find_failures, vertex, sample
    ))


def main() -> None:
    """Run the command-line interface."""
    cli(prog_name="echoloc")
