"""Main CLI entry point for edgelab."""

import json
import sys
from pathlib import Path
from typing import Any, Callable, Dict, Optional

import click
from rich import box
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from ..config import ConfigLoader, Settings
from ..exceptions import EdgeLabError
from ..experiments import run_experiment, write_report
from ..models import EnsembleName, ExperimentConfig, ExperimentKind, ExperimentReport
from ..utils.logfire_setup import setup_logfire
from ..utils.logging import setup_logging

console = Console()

ENSEMBLE_CHOICES = [e.value for e in EnsembleName]


@click.group()
@click.option("--debug", is_flag=True, help="Enable debug mode")
@click.option("--log-level", default=None, help="Log level (overrides EDGELAB_LOG_LEVEL)")
@click.option("--json-logs", is_flag=True, help="Emit logs as JSON")
@click.option("--no-logfire", is_flag=True, help="Disable Logfire spans")
@click.pass_context
def cli(ctx: click.Context, debug: bool, log_level: Optional[str], json_logs: bool, no_logfire: bool) -> None:
    """Monte Carlo lab for edge fluctuations of Wigner and Gaussian ensembles."""
    ctx.ensure_object(dict)
    ctx.obj["debug"] = debug

    settings = Settings()
    ctx.obj["settings"] = settings

    level = "DEBUG" if debug else (log_level or settings.log_level)
    setup_logging(
        level=level,
        log_file=settings.log_file,
        json_format=json_logs or settings.log_format == "json",
    )

    if settings.logfire_enabled and not no_logfire:
        try:
            setup_logfire(settings)
        except Exception as e:
            if debug:
                console.print(f"[yellow]Warning:[/yellow] Failed to setup Logfire: {e}")


def experiment_options(func: Callable[..., Any]) -> Callable[..., Any]:
    """Options shared by every experiment subcommand."""
    options = [
        click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False, path_type=Path),
                     help="JSON config file"),
        click.option("--n", "n", type=int, help="Matrix size"),
        click.option("--reps", "replications", type=int, help="Number of replications"),
        click.option("--seed", type=int, help="Root seed"),
        click.option("--workers", type=int, help="Parallel workers (EDGELAB_THREADS overrides)"),
        click.option("--ensemble", type=click.Choice(ENSEMBLE_CHOICES), help="Ensemble to sample"),
        click.option("--out", "output_dir", type=click.Path(file_okay=False, path_type=Path),
                     help="Output directory"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def build_config(experiment: ExperimentKind, config_path: Optional[Path], **overrides: Any) -> ExperimentConfig:
    """Merge config file, environment and command-line overrides."""
    return ConfigLoader.for_experiment(experiment.value, config_path, **overrides).build()


def render_report(report: ExperimentReport, paths: Dict[str, Path]) -> None:
    """Print moments, checks and output paths."""
    cfg = report.config
    m = report.moments

    def fmt(value: Optional[float]) -> str:
        return "-" if value is None else f"{value:.4g}"

    console.print(Panel.fit(
        f"[bold]{report.experiment_id}[/bold]\n"
        f"ensemble={cfg.ensemble.value} n={cfg.n} reps={cfg.replications} seed={cfg.seed}\n"
        f"mean={fmt(m.mean)} var={fmt(m.variance)} skew={fmt(m.skewness)} "
        f"kurt={fmt(m.excess_kurtosis)} ks={fmt(report.ks)}",
        border_style="blue",
    ))

    table = Table(title="Checks", box=box.ROUNDED)
    table.add_column("Check", style="cyan")
    table.add_column("Result")
    table.add_column("Detail", style="dim")
    for check in report.checks:
        result = "[green]pass[/green]" if check.passed else "[red]fail[/red]"
        table.add_row(check.name, result, check.detail)
    console.print(table)

    if report.tail_probe:
        tails = Table(title="Tail probe", box=box.SIMPLE)
        for column in ("a", "x", "exceed", "p_hat", "95% CI", "diagnostic", "rate", "flag"):
            tails.add_column(column)
        for cell in report.tail_probe:
            tails.add_row(
                f"{cell.a:g}", f"{cell.x:g}", f"{cell.exceed}/{cell.total}", fmt(cell.p_hat),
                f"[{fmt(cell.ci_lo)}, {fmt(cell.ci_hi)}]", fmt(cell.diagnostic), fmt(cell.rate),
                cell.flag or "",
            )
        console.print(tails)

    for role, path in paths.items():
        console.print(f"[green]✓[/green] {role}: {path}")
    console.print(f"[dim]Wall time: {report.wall_time_seconds:.2f}s[/dim]")


def _make_command(experiment: ExperimentKind) -> click.Command:
    @experiment_options
    @click.pass_context
    def command(ctx: click.Context, config_path: Optional[Path], **overrides: Any) -> None:
        settings: Settings = ctx.obj["settings"]
        try:
            cfg = build_config(experiment, config_path, **overrides)
            report = run_experiment(cfg, settings)
            paths = write_report(report, cfg.output_dir or settings.output_dir)
        except EdgeLabError as e:
            console.print(f"[red]Error:[/red] {escape(e.message)}")
            if e.details:
                console.print(f"[dim]{escape(json.dumps(e.details, default=str))}[/dim]")
            if ctx.obj["debug"]:
                console.print_exception()
            sys.exit(1)
        render_report(report, paths)

    command.__doc__ = f"Run the {experiment.value} experiment."
    return click.command(experiment.value)(command)


for _kind in ExperimentKind:
    cli.add_command(_make_command(_kind))


@cli.command("show-config")
@click.argument("experiment", type=click.Choice([k.value for k in ExperimentKind]))
@experiment_options
@click.pass_context
def show_config(ctx: click.Context, experiment: str, config_path: Optional[Path], **overrides: Any) -> None:
    """Print the merged configuration for EXPERIMENT without running it."""
    try:
        cfg = build_config(ExperimentKind(experiment), config_path, **overrides)
    except EdgeLabError as e:
        console.print(f"[red]Error:[/red] {escape(e.message)}")
        if ctx.obj["debug"]:
            console.print_exception()
        sys.exit(1)
    click.echo(json.dumps(cfg.model_dump(mode="json"), indent=2))


@cli.command()
def version() -> None:
    """Show version information."""
    from .. import __version__

    console.print("[bold]edgelab[/bold]")
    console.print(f"Version: {__version__}")
    console.print("Python:", sys.version.split()[0])


def main() -> None:
    """Main entry point."""
    cli()


if __name__ == "__main__":
    main()
