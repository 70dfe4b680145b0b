"""Engine results to versioned JSON records (and engine objects to documents)."""

from src.cocycles import (
    LocalCocycle,
    ObstructionCertificate,
    TransferReport,
)
from src.coeff import coeff_spec_of
from src.groups import Elem, GroupContext, group_spec_of
from src.records import (
    BundleDocument,
    CertificateRecord,
    CocycleDocument,
    ComponentRecord,
    ConfigurationDocument,
    EndEntryRecord,
    EndReportRecord,
    GlueRecord,
    GlueReportRecord,
    PeriodicRecord,
    ResidualRecord,
    ShiftDocument,
    TransferEntryRecord,
    TransferReportRecord,
    ValidationRecord,
    WitnessRecord,
)
from src.shifts import (
    Configuration,
    GlueResult,
    PeriodicConfiguration,
    ShiftKind,
    SubshiftSpec,
    Witness,
    periodic_membership,
)
from src.topology import EndReport


def _names(group: GroupContext, elements: tuple[Elem, ...] | list[Elem]) -> list[str]:
    return [group.format_element(g) for g in elements]


def configuration_document(x: Configuration) -> ConfigurationDocument:
    group = x.group
    return ConfigurationDocument(
        background=x.background,
        overlay=[(group.format_element(g), symbol) for g, symbol in x.cells],
    )


def shift_document(shift: SubshiftSpec) -> ShiftDocument:
    group = shift.group
    doc = ShiftDocument(
        kind=shift.kind.value,
        alphabet=list(shift.alphabet.symbols),
        background=shift.alphabet.background,
    )
    if shift.kind == ShiftKind.SFT:
        doc.window = _names(group, shift.window)
        doc.allowed = [list(row) for row in sorted(shift.allowed)]
    elif shift.kind == ShiftKind.GOLDEN_MEAN:
        doc.windows = [_names(group, window) for window in shift.windows]
        doc.k = len(shift.alphabet) - 1
    return doc


def cocycle_document(c: LocalCocycle) -> CocycleDocument:
    """Rules for one letter of each inverse pair; the others are synthesized."""
    group, coeff = c.group, c.coeff
    windows: dict[str, list[str]] = {}
    rules: dict[str, list[tuple[list[str], str]]] = {}
    for letter in group.letters:
        if letter.index > letter.inverse_index:
            continue
        rule = c.rule(letter)
        windows[letter.name] = _names(group, rule.window)
        rules[letter.name] = [
            (list(key), coeff.format(value))
            for key, value in sorted(rule.table.items())
        ]
    return CocycleDocument(coeff=coeff_spec_of(coeff), windows=windows, rules=rules)


def bundle_document(c: LocalCocycle) -> BundleDocument:
    return BundleDocument(
        group=group_spec_of(c.group),
        shift=shift_document(c.shift),
        cocycle=cocycle_document(c),
    )


def end_report_record(group: GroupContext, report: EndReport) -> EndReportRecord:
    return EndReportRecord(
        group=group.describe(),
        entries=[
            EndEntryRecord(
                inner=entry.inner,
                outer=entry.outer,
                count=entry.count,
                components=[
                    ComponentRecord(
                        least=group.format_element(component.least),
                        size=len(component.elements),
                        touches_sphere=component.touches_sphere,
                    )
                    for component in entry.components
                ],
            )
            for entry in report.entries
        ],
        verdict=report.verdict.value,
    )


def certificate_record(
    c: LocalCocycle, certificate: ObstructionCertificate
) -> CertificateRecord:
    group, coeff = c.group, c.coeff
    pattern = None
    if certificate.pattern is not None:
        pattern = {
            group.format_element(g): symbol
            for g, symbol in sorted(certificate.pattern.items())
        }
    return CertificateRecord(
        kind=certificate.kind.value,
        directions=_names(group, certificate.directions),
        configurations=[configuration_document(x) for x in certificate.configurations],
        values=[coeff.format(value) for value in certificate.values],
        relator=(
            group.format_word(certificate.relator)
            if certificate.relator is not None
            else None
        ),
        pattern=pattern,
    )


def glue_record(result: GlueResult) -> GlueRecord:
    return GlueRecord(
        ok=result.ok,
        reason=result.reason,
        configuration=(
            configuration_document(result.configuration)
            if result.configuration is not None
            else None
        ),
    )


def transfer_report_record(
    c: LocalCocycle, report: TransferReport, seed: int
) -> TransferReportRecord:
    """The report stores ``T = b^-1`` and ``φ`` (see ``cocycles.transfer``)."""
    group, coeff = c.group, c.coeff
    record = TransferReportRecord(
        seed=seed,
        group=group.describe(),
        directions=_names(group, report.directions),
        background=report.background.background,
        radius=report.radius,
        mode="none",
        verdict=report.verdict.value,
        obstruction=report.obstruction.value if report.obstruction else None,
        certificates=[certificate_record(c, cert) for cert in report.certificates],
        validity=report.validity.level.value,
        notes=list(report.notes),
        assumptions=list(report.assumptions),
        glue=glue_record(report.glue) if report.glue is not None else None,
    )
    transfer = report.transfer
    if transfer is not None:
        record.mode = transfer.mode.value
        record.cells = _names(group, transfer.cells)
        record.transfer = [
            TransferEntryRecord(pattern=list(key), value=coeff.format(coeff.inverse(b)))
            for key, b in transfer.table.items()
        ]
    if report.homomorphism is not None:
        record.homomorphism = {
            name: coeff.format(value)
            for name, value in report.homomorphism.as_mapping().items()
        }
    if report.residuals is not None:
        record.residuals_checked = len(report.residuals.residuals)
        record.residual_failures = [
            ResidualRecord(
                g=group.format_element(r.element),
                x=configuration_document(r.configuration),
                lhs=coeff.format(r.lhs),
                rhs=coeff.format(r.rhs),
                ok=r.ok,
            )
            for r in report.residuals.failures
        ]
    return record


def witness_record(result: Witness) -> WitnessRecord:
    group = result.configuration.group
    return WitnessRecord(
        direction=group.format_element(result.direction),
        radius=result.radius,
        agreement_radius=result.agreement_radius,
        configuration=configuration_document(result.configuration),
    )


def periodic_record(shift: SubshiftSpec, y: PeriodicConfiguration) -> PeriodicRecord:
    return PeriodicRecord(
        period=y.period,
        background=y.background,
        cells=[(y.group.format_element(g), symbol) for g, symbol in y.cells],
        in_subshift=periodic_membership(shift, y),
    )


def glue_report_record(
    group: GroupContext, result: GlueResult, g: Elem
) -> GlueReportRecord:
    return GlueReportRecord(
        **glue_record(result).model_dump(), shift_element=group.format_element(g)
    )


def validation_record(c: LocalCocycle) -> ValidationRecord:
    certificate = c.certificate
    return ValidationRecord(
        level=certificate.level.value,
        relators_checked=certificate.relators_checked,
        patterns_checked=certificate.patterns_checked,
        window=_names(c.group, sorted(c.window, key=c.group.sort_key)),
    )
