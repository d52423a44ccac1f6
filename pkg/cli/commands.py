"""
Command-line front end.

Usage:
    python main.py constant --n 1 --alpha 1
    python main.py fig2 --orders 1:8 --grid 0:1:0.01 > fig2.csv
    python main.py det-bound --p 1.5 singular_values.txt
    python main.py verify thm2
"""
from __future__ import annotations

import logging
import math
from pathlib import Path
from typing import Callable, List, Optional, TypeVar

import click

from bounds.models import EigencountInput
from bounds.spectral import det_bound, eigencount_bound
from cli.grids import GRID, ORDERS
from cli.spectrum_io import read_spectrum
from cli.tables import constant_rows, format_number, gamma_rows, write_table, zero_order_rows
from config import APP_NAME, APP_VERSION, DEFAULT_LOG_LEVEL, NumericsConfig, set_numerics
from constants.sharp import c_n_alpha, exponent_pair_for_p, gamma_p
from core.errors import DomainError, SpectrumInputError
from settings_manager import load_effective_settings
from verification.registry import list_suites, run_suite

logger = logging.getLogger(__name__)

T = TypeVar("T")

EXIT_VERIFY_FAILED = 1


class InputError(click.ClickException):
    """Unreadable or invalid input data."""

    exit_code = SpectrumInputError.exit_code


def _guarded(action: Callable[[], T]) -> T:
    """Run action, turning domain and input errors into click exits 2 and 3."""
    try:
        return action()
    except DomainError as exc:
        raise click.UsageError(str(exc)) from exc
    except SpectrumInputError as exc:
        raise InputError(str(exc)) from exc


class _EchoHandler(logging.Handler):
    """Route log records through click so they land on the current stderr."""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            click.echo(self.format(record), err=True)
        except Exception:  # noqa: BLE001
            self.handleError(record)


def _configure_logging(level_name: str, verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, str(level_name).upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
        handlers=[_EchoHandler()],
        force=True,
    )


@click.group()
@click.version_option(version=APP_VERSION, prog_name=APP_NAME)
@click.option(
    "--config",
    "config_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="YAML file overriding config.yaml.",
)
@click.option("--verbose", is_flag=True, help="Log solver progress to stderr.")
def cli(config_path: Optional[Path], verbose: bool) -> None:
    """
    Sharp growth constants of Weierstrass primary factors.

    Tables are written to stdout as CSV; logs go to stderr.
    """
    _configure_logging(DEFAULT_LOG_LEVEL, verbose)
    settings = load_effective_settings(config_path)
    _configure_logging(settings.get("logging", {}).get("level", DEFAULT_LOG_LEVEL), verbose)
    set_numerics(NumericsConfig.from_settings(settings))


@cli.command()
@click.option("--n", "n", type=int, required=True, help="Order of the primary factor.")
@click.option("--alpha", type=float, required=True, help="Exponent offset in [0, 1].")
def constant(n: int, alpha: float) -> None:
    """Print C_{n,alpha} with its maximizing radius, method and residual."""
    result = _guarded(lambda: c_n_alpha(n, alpha))
    click.echo(f"value: {format_number(result.value)}")
    click.echo(f"maximizing_radius: {format_number(result.maximizing_radius)}")
    click.echo(f"method: {result.method}")
    click.echo(f"residual: {format_number(result.residual)}")


@cli.command()
@click.option("--p", "p", type=float, required=True, help="Schatten exponent p > 0.")
def gamma(p: float) -> None:
    """Print Gamma_p and its decomposition p = n + alpha."""
    pair = _guarded(lambda: exponent_pair_for_p(p))
    value = _guarded(lambda: gamma_p(p))
    click.echo(f"p: {format_number(p)}")
    click.echo(f"n: {pair.n}")
    click.echo(f"alpha: {format_number(pair.alpha)}")
    click.echo(f"gamma: {format_number(value)}")


@cli.command("fig1")
@click.option("--grid", "p_grid", type=GRID, default="0.05:8:0.05", show_default=True, help="p values.")
def fig1(p_grid: List[float]) -> None:
    """Table of p -> Gamma_p (rows p,gamma)."""
    if any(p <= 0.0 for p in p_grid):
        raise click.UsageError("Every p in the grid must be positive")
    rows = _guarded(lambda: gamma_rows(p_grid))
    write_table(click.get_text_stream("stdout"), ("p", "gamma"), rows)


@cli.command("fig2")
@click.option("--orders", type=ORDERS, default="1:8", show_default=True, help="Orders n, lo:hi or a,b,c.")
@click.option("--grid", "alpha_grid", type=GRID, default="0:1:0.01", show_default=True, help="alpha values.")
def fig2(orders: List[int], alpha_grid: List[float]) -> None:
    """Table of C_{n,alpha} (rows n,alpha,C)."""
    if any(n < 1 for n in orders):
        raise click.UsageError("fig2 covers orders n >= 1")
    rows = _guarded(lambda: constant_rows(orders, alpha_grid))
    write_table(click.get_text_stream("stdout"), ("n", "alpha", "C"), rows)


@cli.command("fig3")
@click.option("--grid", "alpha_grid", type=GRID, default="0.01:1:0.01", show_default=True, help="alpha values in (0, 1].")
def fig3(alpha_grid: List[float]) -> None:
    """Table of C_{0,alpha}, r_alpha and (1/alpha - 1)^(1-alpha)."""
    if any(not 0.0 < alpha <= 1.0 for alpha in alpha_grid):
        raise click.UsageError("fig3 grid must lie in (0, 1]")
    rows = _guarded(lambda: zero_order_rows(alpha_grid))
    write_table(click.get_text_stream("stdout"), ("alpha", "C0", "r_alpha", "upper_bound"), rows)


cli.add_command(fig1, name="gamma-table")
cli.add_command(fig3, name="c0-table")


@cli.command("det-bound")
@click.option("--p", "p", type=float, required=True, help="Schatten exponent p > 0.")
@click.argument("spectrum_file", type=click.Path(path_type=Path))
def det_bound_command(p: float, spectrum_file: Path) -> None:
    """Bound |det_p(I - K)| from singular values or eigenvalue moduli in SPECTRUM_FILE."""
    sample = _guarded(lambda: read_spectrum(spectrum_file))
    result = _guarded(lambda: det_bound(p, sample))
    click.echo(f"log_bound: {format_number(result.log_bound)}")
    click.echo(f"bound: {'overflow' if result.overflows else format_number(result.bound)}")


@cli.command("eigencount-bound")
@click.option("--p", "p", type=float, required=True, help="Schatten exponent p > 0.")
@click.option("--rp", "r_p", type=float, required=True, help="Constant R_p of the resolvent estimate.")
@click.option("--norm-a", "norm_a", type=float, required=True, help="Operator norm of A.")
@click.option("--s", "s", type=float, required=True, help="Radius s > ||A||.")
@click.argument("spectrum_file", type=click.Path(path_type=Path))
def eigencount_bound_command(p: float, r_p: float, norm_a: float, s: float, spectrum_file: Path) -> None:
    """Bound the number of eigenvalues of A + K outside the disk of radius s."""
    sample = _guarded(lambda: read_spectrum(spectrum_file))
    data = _guarded(lambda: EigencountInput(p=p, r_p=r_p, norm_a=norm_a, s=s, approx_numbers=sample))
    value = _guarded(lambda: eigencount_bound(data))
    logger.debug("Eigenvalue count for %d approximation numbers, s=%s", len(sample), s)
    click.echo("warning: the bound scales linearly with the supplied R_p", err=True)
    click.echo(f"bound: {'overflow' if math.isinf(value) else format_number(value)}")


@cli.command()
@click.argument("suite", type=click.Choice([entry.id for entry in list_suites()]))
@click.pass_context
def verify(ctx: click.Context, suite: str) -> None:
    """Run a property suite; exit 1 when any check fails."""
    results = run_suite(suite)
    for result in results:
        click.echo(f"{result.label} {result.suite}/{result.name}: {result.detail}")
    failed = sum(not result.passed for result in results)
    click.echo(f"{len(results) - failed}/{len(results)} checks passed")
    if failed:
        ctx.exit(EXIT_VERIFY_FAILED)
