"""Untwist CLI - cocycle untwisting, specification witnesses and end analysis."""

import sys
from collections.abc import Callable
from typing import Any

import click
from pydantic import BaseModel
from rich.console import Console
from rich.panel import Panel

from src.constants import EXIT_INPUT_ERROR, EXIT_OK
from src.exceptions import BudgetError, InputError, UntwistError
from src.records import RunContext
from src.workflows import (
    EXAMPLE_KINDS,
    emit,
    resolve_run_context,
    run_ends,
    run_eval,
    run_example,
    run_glue,
    run_periodize,
    run_untwist,
    run_validate,
    run_witness,
)

console = Console(stderr=True)

GROUP_HELP = "Group document (or a bundle carrying one)"
SHIFT_HELP = "Subshift document; defaults to the bundle's shift or the full 2-shift"
COCYCLE_HELP = "Cocycle document (or a bundle with group, shift and cocycle)"

EXIT_CODE_HELP = (
    "Exit codes: 0 success or untwisted, 2 input or budget error, "
    "3 inconclusive, 4 obstruction found."
)


# --- Helper Functions ---


def _run_options(command: Callable[..., Any]) -> Callable[..., Any]:
    """Attach the flags every subcommand shares."""
    options = [
        click.option("--seed", type=int, default=None, help="Random seed"),
        click.option(
            "--radius",
            type=click.IntRange(min=0),
            default=None,
            help="Transfer table radius R",
        ),
        click.option(
            "--cap", type=int, default=None, help="Largest ball (in elements)"
        ),
        click.option(
            "--format",
            "output_format",
            type=click.Choice(["json", "text"], case_sensitive=False),
            default=None,
            help="Report format",
        ),
        click.option(
            "--out",
            type=click.Path(dir_okay=False),
            default=None,
            help="Write the report here instead of stdout",
        ),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _context(**flags: Any) -> RunContext:
    try:
        return resolve_run_context(**flags)
    except ValueError as config_error:
        console.print(f"[bold red]Configuration Error:[/bold red] {config_error}")
        sys.exit(EXIT_INPUT_ERROR)


def _execute(
    title: str, run: RunContext, work: Callable[[], tuple[BaseModel, int]]
) -> None:
    """Run one command, print or write its report and exit with its code."""
    console.print(
        Panel.fit(f"[bold blue]{title}[/bold blue]", subtitle=f"seed {run.seed}")
    )
    try:
        record, code = work()
    except InputError as input_error:
        console.print(f"[bold red]Input Error:[/bold red] {input_error}")
        sys.exit(EXIT_INPUT_ERROR)
    except BudgetError as budget_error:
        console.print(f"[bold red]Budget Exceeded:[/bold red] {budget_error}")
        sys.exit(EXIT_INPUT_ERROR)
    except (UntwistError, ValueError) as error:
        console.print(f"[bold red]Error:[/bold red] {error}")
        sys.exit(EXIT_INPUT_ERROR)

    _emit_report(record, run)
    if code != EXIT_OK:
        sys.exit(code)


def _emit_report(record: BaseModel, run: RunContext) -> None:
    try:
        text = emit(record, run)
    except OSError as write_error:
        console.print(f"[bold red]Output Error:[/bold red] {write_error}")
        sys.exit(EXIT_INPUT_ERROR)
    if text is not None:
        click.echo(text, nl=False)
        if run.format == "text":
            click.echo()


# --- CLI Interface ---


@click.group(epilog=EXIT_CODE_HELP)
@click.version_option(version="0.1.0", prog_name="untwist")
def cli():
    """Untwist - cohomology of locally constant cocycles over shifts.

    Decides, with certificates, whether a cocycle over a subshift of a finitely
    generated group is cohomologous to a homomorphism, and builds the shift
    space and Cayley graph evidence the decision relies on.
    """


@cli.command()
@click.option("--group", "group_path", required=True, help=GROUP_HELP)
@click.option(
    "--schedule",
    type=(int, int),
    multiple=True,
    help="(inner, outer) radius pair; repeat for a schedule",
)
@_run_options
def ends(group_path: str, schedule: tuple[tuple[int, int], ...], **flags: Any):
    """Estimate the number of ends of the group's Cayley graph.

    Example:
        untwist ends --group z2.json
        untwist ends --group f2.json --schedule 1 5 --schedule 2 6 --schedule 3 7
    """
    run = _context(**flags)
    _execute(
        "End Estimate",
        run,
        lambda: run_ends(group_path=group_path, schedule=list(schedule), run=run),
    )


@cli.command(name="untwist")
@click.option("--group", "group_path", default=None, help=GROUP_HELP)
@click.option("--shift", "shift_path", default=None, help=SHIFT_HELP)
@click.option("--cocycle", "cocycle_path", required=True, help=COCYCLE_HELP)
@_run_options
def untwist_command(
    group_path: str | None, shift_path: str | None, cocycle_path: str, **flags: Any
):
    """Untwist a cocycle into a transfer map and a homomorphism.

    Exits 0 when untwisted, 4 with a certificate when an obstruction is found
    and 3 when the evidence is inconclusive.

    Example:
        untwist untwist --cocycle example-z.json
        untwist untwist --group z2.json --cocycle c.json --radius 1 --format text
    """
    run = _context(**flags)
    _execute(
        "Cocycle Untwisting",
        run,
        lambda: run_untwist(
            group_path=group_path,
            shift_path=shift_path,
            cocycle_path=cocycle_path,
            run=run,
        ),
    )


@cli.command(name="witness")
@click.option("--group", "group_path", required=True, help=GROUP_HELP)
@click.option("--shift", "shift_path", default=None, help=SHIFT_HELP)
@click.option("--a", "direction", required=True, help="Direction element a")
@click.option("--r", type=click.IntRange(min=0), required=True, help="Cone radius r")
@click.option("--x", "x_path", required=True, help="Configuration x")
@click.option("--x-prime", "x_prime_path", required=True, help="Configuration x'")
@_run_options
def witness_command(
    group_path: str,
    shift_path: str | None,
    direction: str,
    r: int,
    x_path: str,
    x_prime_path: str,
    **flags: Any,
):
    """Build a specification witness for a pair agreeing on a large ball.

    Example:
        untwist witness --group z2.json --a "(1,0)" --r 1 --x x.json --x-prime y.json
    """
    run = _context(**flags)
    _execute(
        "Specification Witness",
        run,
        lambda: run_witness(
            group_path=group_path,
            shift_path=shift_path,
            direction=direction,
            r=r,
            x_path=x_path,
            x_prime_path=x_prime_path,
            run=run,
        ),
    )


@cli.command()
@click.option("--group", "group_path", required=True, help=GROUP_HELP)
@click.option("--shift", "shift_path", default=None, help=SHIFT_HELP)
@click.option("--z", "z_path", required=True, help="Configuration z in X")
@click.option(
    "--period", type=click.IntRange(min=1), required=True, help="Period K"
)
@click.option(
    "--omega",
    "omega_radius",
    type=click.IntRange(min=0),
    default=1,
    show_default=True,
    help="Agree with z on B(omega)",
)
@_run_options
def periodize(
    group_path: str,
    shift_path: str | None,
    z_path: str,
    period: int,
    omega_radius: int,
    **flags: Any,
):
    """Build a (KZ)^d-periodic point of X agreeing with z on a ball.

    Example:
        untwist periodize --group z2.json --shift gm.json --z z.json --period 8
    """
    run = _context(**flags)
    _execute(
        "Periodization",
        run,
        lambda: run_periodize(
            group_path=group_path,
            shift_path=shift_path,
            z_path=z_path,
            period=period,
            omega_radius=omega_radius,
            run=run,
        ),
    )


@cli.command()
@click.option("--group", "group_path", required=True, help=GROUP_HELP)
@click.option("--shift", "shift_path", default=None, help=SHIFT_HELP)
@click.option("--p1", "p1_path", required=True, help="Pattern placed at g")
@click.option("--p2", "p2_path", required=True, help="Pattern placed at e")
@click.option("--g", "shift_element", required=True, help="Shift element g")
@click.option("--r", type=click.IntRange(min=0), required=True, help="Pattern radius")
@_run_options
def glue(
    group_path: str,
    shift_path: str | None,
    p1_path: str,
    p2_path: str,
    shift_element: str,
    r: int,
    **flags: Any,
):
    """Check that two patterns glue far apart along g (mixing evidence).

    Example:
        untwist glue --group z2.json --shift gm.json --p1 p.json --p2 q.json \\
            --g "(6,0)" --r 1
    """
    run = _context(**flags)
    _execute(
        "Glue Check",
        run,
        lambda: run_glue(
            group_path=group_path,
            shift_path=shift_path,
            p1_path=p1_path,
            p2_path=p2_path,
            shift_element=shift_element,
            r=r,
            run=run,
        ),
    )


@cli.command()
@click.option(
    "--kind",
    type=click.Choice(EXAMPLE_KINDS, case_sensitive=False),
    required=True,
    help="z, free (counterexamples) or coboundary (random, seeded)",
)
@click.option(
    "--rank",
    type=click.IntRange(min=1),
    default=2,
    show_default=True,
    help="Rank of the free group for --kind free",
)
@_run_options
def example(kind: str, rank: int, **flags: Any):
    """Emit a worked cocycle as a bundle document.

    Example:
        untwist example --kind z --out example-z.json
        untwist example --kind coboundary --seed 7
    """
    run = _context(**flags)
    _execute(
        "Example Cocycle",
        run,
        lambda: run_example(kind=kind.lower(), rank=rank, run=run),
    )


@cli.command(name="eval")
@click.option("--group", "group_path", default=None, help=GROUP_HELP)
@click.option("--shift", "shift_path", default=None, help=SHIFT_HELP)
@click.option("--cocycle", "cocycle_path", required=True, help=COCYCLE_HELP)
@click.option("--g", "element", required=True, help="Group element g")
@click.option("--x", "x_path", required=True, help="Configuration x")
@_run_options
def eval_command(
    group_path: str | None,
    shift_path: str | None,
    cocycle_path: str,
    element: str,
    x_path: str,
    **flags: Any,
):
    """Evaluate c(g, x).

    Example:
        untwist eval --cocycle c.json --g "(2,1)" --x conf.json
    """
    run = _context(**flags)
    _execute(
        "Cocycle Evaluation",
        run,
        lambda: run_eval(
            group_path=group_path,
            shift_path=shift_path,
            cocycle_path=cocycle_path,
            element=element,
            x_path=x_path,
            run=run,
        ),
    )


@cli.command()
@click.option("--group", "group_path", default=None, help=GROUP_HELP)
@click.option("--shift", "shift_path", default=None, help=SHIFT_HELP)
@click.option("--cocycle", "cocycle_path", required=True, help=COCYCLE_HELP)
@_run_options
def validate(
    group_path: str | None, shift_path: str | None, cocycle_path: str, **flags: Any
):
    """Check a cocycle's relators and inverse rules.

    Example:
        untwist validate --cocycle c.json
    """
    run = _context(**flags)
    _execute(
        "Cocycle Validation",
        run,
        lambda: run_validate(
            group_path=group_path,
            shift_path=shift_path,
            cocycle_path=cocycle_path,
            run=run,
        ),
    )


if __name__ == "__main__":
    cli()
