"""High-level workflows behind the untwist subcommands.

Each ``run_*`` function loads its inputs, runs one engine operation and returns
the report record with the exit code the command should end with. All
randomness goes through one ``random.Random`` seeded from the run context.
"""

import random

from pydantic import BaseModel
from rich.console import Console

from src.cocycles import (
    LocalCocycle,
    UntwistSettings,
    UntwistVerdict,
    evaluate,
    example_cocycle_free,
    example_cocycle_z,
    random_coboundary_instance,
    untwist,
)
from src.config import UntwistConfig, load_config
from src.constants import (
    EXIT_INCONCLUSIVE,
    EXIT_OBSTRUCTION,
    EXIT_OK,
)
from src.exceptions import ParseError
from src.file_utils import write_report
from src.groups import GroupContext
from src.input import (
    has_bundle_section,
    load_cocycle,
    load_configuration,
    load_group,
    load_shift,
)
from src.output import (
    bundle_document,
    end_report_record,
    format_record,
    glue_report_record,
    periodic_record,
    transfer_report_record,
    validation_record,
    witness_record,
)
from src.records import EvalRecord, RunContext
from src.shifts import SubshiftSpec, glue_check, periodize_zd, witness
from src.topology import EndVerdict, estimate_ends

# Progress goes to stderr so that stdout carries only the report
console = Console(stderr=True)

EXAMPLE_KINDS = ("z", "free", "coboundary")

_VERDICT_EXIT = {
    UntwistVerdict.UNTWISTED: EXIT_OK,
    UntwistVerdict.OBSTRUCTION: EXIT_OBSTRUCTION,
    UntwistVerdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


def resolve_run_context(
    *,
    seed: int | None,
    radius: int | None,
    cap: int | None,
    output_format: str | None,
    out: str | None,
    start_path: str = ".",
) -> RunContext:
    """
    Merge command-line overrides over the ``.untwist.toml`` configuration.

    ``cap`` overrides the ball element cap, the one budget every command uses.

    Raises:
        ValueError: If the configuration or an override is invalid.
    """
    config = load_config(start_path=start_path)
    if cap is not None:
        if cap <= 0:
            raise ValueError(f"--cap must be positive, got {cap}")
        config = config.model_copy(
            update={"caps": config.caps.model_copy(update={"ball_elements": cap})}
        )
    return RunContext(
        config=config,
        seed=config.run.seed if seed is None else seed,
        radius=config.run.radius if radius is None else radius,
        format=output_format or config.run.format,
        out=out,
    )


def render(record: BaseModel, run: RunContext) -> str:
    """The report text in the run's format."""
    if run.format == "text":
        return format_record(record)
    return record.model_dump_json(indent=2) + "\n"


def emit(record: BaseModel, run: RunContext) -> str | None:
    """
    Write the report to ``run.out`` or hand it back for printing.

    Returns:
        The rendered report when no output path is set, else None.
    """
    text = render(record, run)
    if run.out is None:
        return text
    write_report(run.out, text)
    console.print(f"[green]✓[/green] Report written to {run.out}")
    return None


def _settings(config: UntwistConfig, radius: int) -> UntwistSettings:
    battery = config.battery
    return UntwistSettings(
        radius=radius,
        exhaustive_radius=battery.exhaustive_radius,
        random_pairs=battery.random_pairs,
        random_radius=battery.random_radius,
        verify_samples=battery.verify_samples,
        transfer_cap=config.caps.transfer_patterns,
    )


def _load_space(
    run: RunContext, group_path: str, shift_path: str | None
) -> tuple[GroupContext, SubshiftSpec]:
    """The group and its subshift; a bundle group file may carry the shift."""
    group = load_group(group_path, run.config)
    if shift_path is None and has_bundle_section(group_path, "shift"):
        shift_path = group_path
    return group, load_shift(shift_path, group)


def _load_cocycle(
    run: RunContext,
    rng: random.Random,
    group_path: str | None,
    shift_path: str | None,
    cocycle_path: str,
) -> LocalCocycle:
    group, shift = _load_space(run, group_path or cocycle_path, shift_path)
    console.print("[cyan]Validating cocycle...[/cyan]")
    return load_cocycle(cocycle_path, group, shift, run.config, rng)


# --- Commands ---


def run_ends(
    *, group_path: str, schedule: list[tuple[int, int]] | None, run: RunContext
) -> tuple[BaseModel, int]:
    """Estimate the number of ends; Inconclusive exits with 3."""
    group = load_group(group_path, run.config)
    console.print(f"[cyan]Counting annulus components of {group.describe()}...[/cyan]")
    report = estimate_ends(group, schedule or run.config.ends.schedule)
    code = EXIT_INCONCLUSIVE if report.verdict == EndVerdict.INCONCLUSIVE else EXIT_OK
    return end_report_record(group, report), code


def run_untwist(
    *,
    group_path: str | None,
    shift_path: str | None,
    cocycle_path: str,
    run: RunContext,
) -> tuple[BaseModel, int]:
    """Run the untwisting pipeline and map its verdict to an exit code."""
    rng = random.Random(run.seed)
    c = _load_cocycle(run, rng, group_path, shift_path, cocycle_path)
    console.print(
        f"[cyan]Untwisting on {c.group.describe()} at radius {run.radius}...[/cyan]"
    )
    report = untwist(c, settings=_settings(run.config, run.radius), rng=rng)
    return transfer_report_record(c, report, run.seed), _VERDICT_EXIT[report.verdict]


def run_witness(
    *,
    group_path: str,
    shift_path: str | None,
    direction: str,
    r: int,
    x_path: str,
    x_prime_path: str,
    run: RunContext,
) -> tuple[BaseModel, int]:
    """Build a specification witness for the pair ``(x, x')``."""
    group, shift = _load_space(run, group_path, shift_path)
    x = load_configuration(x_path, group, shift)
    x_prime = load_configuration(x_prime_path, group, shift)
    result = witness(shift, group.parse_element(direction), r, x, x_prime)
    return witness_record(result), EXIT_OK


def run_periodize(
    *,
    group_path: str,
    shift_path: str | None,
    z_path: str,
    period: int,
    omega_radius: int,
    run: RunContext,
) -> tuple[BaseModel, int]:
    """Periodize ``z`` so that it agrees with ``z`` on ``B(omega_radius)``."""
    group, shift = _load_space(run, group_path, shift_path)
    z = load_configuration(z_path, group, shift)
    y = periodize_zd(shift, z, group.ball(omega_radius).elements, period)
    return periodic_record(shift, y), EXIT_OK


def run_glue(
    *,
    group_path: str,
    shift_path: str | None,
    p1_path: str,
    p2_path: str,
    shift_element: str,
    r: int,
    run: RunContext,
) -> tuple[BaseModel, int]:
    """Glue two patterns (given as finite overlays) far apart along ``g``."""
    group, shift = _load_space(run, group_path, shift_path)
    p1 = load_configuration(p1_path, group, shift).overlay
    p2 = load_configuration(p2_path, group, shift).overlay
    g = group.parse_element(shift_element)
    result = glue_check(shift, dict(p1), dict(p2), g, r)
    return glue_report_record(group, result, g), EXIT_OK


def run_example(*, kind: str, rank: int, run: RunContext) -> tuple[BaseModel, int]:
    """
    Emit a worked cocycle as a bundle document.

    ``z`` and ``free`` are the ``c(s, x) = x_s`` counterexamples; ``coboundary``
    is a random cohomologically trivial cocycle on Z^2 drawn from the seed.

    Raises:
        ParseError: If ``kind`` is unknown.
    """
    if kind == "z":
        c = example_cocycle_z()
    elif kind == "free":
        c = example_cocycle_free(rank)
    elif kind == "coboundary":
        c = random_coboundary_instance(random.Random(run.seed)).cocycle
    else:
        raise ParseError("example kind", kind)
    return bundle_document(c), EXIT_OK


def run_eval(
    *,
    group_path: str | None,
    shift_path: str | None,
    cocycle_path: str,
    element: str,
    x_path: str,
    run: RunContext,
) -> tuple[BaseModel, int]:
    """Evaluate ``c(g, x)``."""
    rng = random.Random(run.seed)
    c = _load_cocycle(run, rng, group_path, shift_path, cocycle_path)
    x = load_configuration(x_path, c.group, c.shift)
    g = c.group.parse_element(element)
    value = evaluate(c, g, x)
    return EvalRecord(g=c.group.format_element(g), value=c.coeff.format(value)), EXIT_OK


def run_validate(
    *,
    group_path: str | None,
    shift_path: str | None,
    cocycle_path: str,
    run: RunContext,
) -> tuple[BaseModel, int]:
    """Check the cocycle's relators and inverse rules; failures raise."""
    rng = random.Random(run.seed)
    c = _load_cocycle(run, rng, group_path, shift_path, cocycle_path)
    return validation_record(c), EXIT_OK
