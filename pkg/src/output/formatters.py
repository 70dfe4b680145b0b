"""Text rendering of report records (``--format text``).

Output is rich markup; the JSON form of every record stays the
machine-readable reference.
"""

from pydantic import BaseModel

from src.records import (
    CertificateRecord,
    EndReportRecord,
    EvalRecord,
    GlueRecord,
    GlueReportRecord,
    PeriodicRecord,
    TransferReportRecord,
    ValidationRecord,
    WitnessRecord,
)

_VERDICT_STYLE = {
    "Untwisted": "bold green",
    "OneEnd": "bold green",
    "TwoEnds": "bold green",
    "InfinitelyMany": "bold green",
    "ObstructionFound": "bold red",
    "Inconclusive": "bold yellow",
}


def _verdict(verdict: str) -> str:
    style = _VERDICT_STYLE.get(verdict, "bold")
    return f"[{style}]{verdict}[/{style}]"


def _overlay(cells: list[tuple[str, str]], background: str) -> str:
    if not cells:
        return f"constant {background!r}"
    inner = ", ".join(f"{g}↦{symbol}" for g, symbol in cells)
    return f"{{{inner}}} over {background!r}"


def format_end_report(record: EndReportRecord) -> str:
    lines = [f"# Ends of {record.group}", ""]
    for entry in record.entries:
        lines.append(
            f"B({entry.outer}) \\ B({entry.inner}): {entry.count} unbounded "
            f"of {len(entry.components)} components"
        )
    lines += ["", f"Verdict: {_verdict(record.verdict)} [dim]({record.note})[/dim]"]
    return "\n".join(lines)


def format_certificate(record: CertificateRecord) -> str:
    text = f"{record.kind}"
    if record.directions:
        text += f" along {', '.join(record.directions)}"
    if record.values:
        text += f": {' vs '.join(record.values)}"
    for config in record.configurations:
        text += f"\n    {_overlay(config.overlay, config.background)}"
    if record.relator is not None:
        text += f"\n    relator {' '.join(record.relator)} on {record.pattern}"
    return text


def format_glue(record: GlueRecord) -> str:
    if record.ok and record.configuration is not None:
        config = record.configuration
        return f"glued: {_overlay(config.overlay, config.background)}"
    return f"not glued ({record.reason})"


def format_transfer_report(record: TransferReportRecord) -> str:
    """Summary of an untwist run; the full table is only in the JSON form."""
    lines = [
        f"# Untwist on {record.group}",
        "",
        f"Directions: {', '.join(record.directions) or 'none'}",
        f"Background: {record.background!r}, radius {record.radius} "
        f"({record.mode}, {len(record.transfer)} patterns)",
        f"Cocycle validity: {record.validity}",
        f"Seed: {record.seed}",
    ]
    if record.homomorphism is not None:
        values = ", ".join(f"{k} ↦ {v}" for k, v in record.homomorphism.items())
        lines.append(f"Homomorphism: {values}")
    if record.residuals_checked:
        failures = len(record.residual_failures)
        checked = record.residuals_checked
        lines.append(f"Residuals: {checked} checked, {failures} failed")
    if record.certificates:
        lines += ["", "Certificates:"]
        lines += [f"  • {format_certificate(cert)}" for cert in record.certificates]
    if record.glue is not None:
        lines.append(f"Glue check: {format_glue(record.glue)}")
    for note in record.notes:
        lines.append(f"[yellow]⚠[/yellow] {note}")
    for assumption in record.assumptions:
        lines.append(f"[dim]{assumption}[/dim]")
    lines += ["", f"Verdict: {_verdict(record.verdict)}"]
    return "\n".join(lines)


def format_witness(record: WitnessRecord) -> str:
    config = record.configuration
    return (
        f"Witness along {record.direction} (r={record.radius}, "
        f"N={record.agreement_radius}):\n"
        f"  {_overlay(config.overlay, config.background)}"
    )


def format_periodic(record: PeriodicRecord) -> str:
    status = "in X" if record.in_subshift else "[red]not in X[/red]"
    return (
        f"Period {record.period} ({status}): "
        f"{_overlay(record.cells, record.background)}"
    )


def format_glue_report(record: GlueReportRecord) -> str:
    return f"Glue along {record.shift_element}: {format_glue(record)}"


def format_eval(record: EvalRecord) -> str:
    return f"c({record.g}, x) = {record.value}"


def format_validation(record: ValidationRecord) -> str:
    return (
        f"Cocycle valid ({record.level}): {record.relators_checked} relators, "
        f"{record.patterns_checked} patterns, window {{{', '.join(record.window)}}}"
    )


_FORMATTERS = {
    EndReportRecord: format_end_report,
    TransferReportRecord: format_transfer_report,
    WitnessRecord: format_witness,
    PeriodicRecord: format_periodic,
    GlueReportRecord: format_glue_report,
    EvalRecord: format_eval,
    ValidationRecord: format_validation,
}


def format_record(record: BaseModel) -> str:
    """Text form of any report record; unknown records fall back to JSON."""
    formatter = _FORMATTERS.get(type(record))
    if formatter is None:
        return record.model_dump_json(indent=2)
    return formatter(record)  # type: ignore[operator]
