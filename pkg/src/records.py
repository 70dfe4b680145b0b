"""Pydantic documents: JSON inputs and versioned JSON reports.

Input documents mirror the command-line files (group, coefficient group, shift,
configuration, cocycle, bundle). Report records carry ``schema_version`` and
the seed of the run that produced them.
"""

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

from pydantic import BaseModel, Field

from src.constants import SCHEMA_VERSION

if TYPE_CHECKING:
    from src.config import UntwistConfig

# --- Input documents ---


class GroupSpec(BaseModel):
    """A group family and its parameters."""

    family: str = Field(
        ...,
        description="free_abelian | free | free_product_cyclic | heisenberg",
    )
    params: int | list[int] | dict[str, Any] = Field(
        default_factory=dict,
        description="d, r, the factor orders, or nothing (Heisenberg)",
    )


class CoeffSpec(BaseModel):
    """The discrete target group H."""

    kind: str = Field(default="cyclic", description="cyclic | free_abelian | table")
    n: int | None = Field(default=None, description="Order of a cyclic group")
    k: int | None = Field(default=None, description="Rank of a free abelian target")
    elements: list[str] | None = Field(default=None, description="Table element names")
    table: list[list[str | int]] | None = Field(
        default=None, description="Row-major multiplication table"
    )


class ShiftDocument(BaseModel):
    """A subshift: full shift, SFT or generalized golden mean shift."""

    kind: str = Field(default="full", description="full | sft | golden_mean")
    alphabet: list[str] = Field(default_factory=lambda: ["0", "1"])
    background: str | None = Field(
        default=None, description="Background symbol (default: first symbol)"
    )
    window: list[str] = Field(default_factory=list, description="SFT window F")
    allowed: list[list[str]] = Field(
        default_factory=list, description="Allowed SFT patterns, aligned with window"
    )
    windows: list[list[str]] = Field(
        default_factory=list,
        description="Golden mean windows F_j (empty: {e, s} for every generator)",
    )
    k: int | None = Field(
        default=None, description="Golden mean alphabet {0..k} (overrides alphabet)"
    )


class ConfigurationDocument(BaseModel):
    """A finite overlay over a constant background."""

    background: str = "0"
    overlay: list[tuple[str, str]] = Field(default_factory=list)


class CocycleDocument(BaseModel):
    """A locally constant cocycle given by per-letter rule tables.

    ``rules[letter]`` lists ``[[symbols...], h]`` rows; the symbols are read on
    ``windows[letter]`` when given, else on ``window``.
    """

    coeff: CoeffSpec = Field(default_factory=lambda: CoeffSpec(kind="cyclic", n=2))
    window: list[str] = Field(default_factory=list)
    windows: dict[str, list[str]] = Field(default_factory=dict)
    rules: dict[str, list[tuple[list[str], Any]]] = Field(default_factory=dict)


class BundleDocument(BaseModel):
    """Group, shift and cocycle in one file (what ``example`` emits)."""

    schema_version: int = SCHEMA_VERSION
    group: GroupSpec
    shift: ShiftDocument | None = None
    cocycle: CocycleDocument | None = None


# --- Reports ---


class ComponentRecord(BaseModel):
    """One connected component of an annulus."""

    least: str
    size: int
    touches_sphere: bool


class EndEntryRecord(BaseModel):
    inner: int
    outer: int
    count: int
    components: list[ComponentRecord]


class EndReportRecord(BaseModel):
    """Finite-radius end estimate."""

    schema_version: int = SCHEMA_VERSION
    group: str
    entries: list[EndEntryRecord]
    verdict: str
    note: str = "finite-radius evidence, not a proof"


class CertificateRecord(BaseModel):
    """A replayable obstruction certificate."""

    kind: str
    directions: list[str] = Field(default_factory=list)
    configurations: list[ConfigurationDocument] = Field(default_factory=list)
    values: list[str] = Field(default_factory=list)
    relator: list[str] | None = None
    pattern: dict[str, str] | None = None


class ResidualRecord(BaseModel):
    g: str
    x: ConfigurationDocument
    lhs: str
    rhs: str
    ok: bool


class TransferEntryRecord(BaseModel):
    pattern: list[str]
    value: str


class GlueRecord(BaseModel):
    """Result of a gluing (mixing) check."""

    ok: bool
    reason: str | None = None
    configuration: ConfigurationDocument | None = None


class TransferReportRecord(BaseModel):
    """Outcome of the untwisting pipeline."""

    schema_version: int = SCHEMA_VERSION
    seed: int
    group: str
    directions: list[str]
    background: str
    radius: int
    mode: str
    cells: list[str] = Field(default_factory=list)
    transfer: list[TransferEntryRecord] = Field(default_factory=list)
    homomorphism: dict[str, str] | None = None
    residuals_checked: int = 0
    residual_failures: list[ResidualRecord] = Field(default_factory=list)
    verdict: str
    obstruction: str | None = None
    certificates: list[CertificateRecord] = Field(default_factory=list)
    validity: str
    notes: list[str] = Field(default_factory=list)
    assumptions: list[str] = Field(default_factory=list)
    glue: GlueRecord | None = None


class WitnessRecord(BaseModel):
    """A specification witness y for a pair (x, x')."""

    schema_version: int = SCHEMA_VERSION
    direction: str
    radius: int
    agreement_radius: int
    configuration: ConfigurationDocument


class PeriodicRecord(BaseModel):
    """A (KZ)^d-periodic configuration on its fundamental domain."""

    schema_version: int = SCHEMA_VERSION
    period: int
    background: str
    cells: list[tuple[str, str]]
    in_subshift: bool


class GlueReportRecord(GlueRecord):
    schema_version: int = SCHEMA_VERSION
    shift_element: str


class EvalRecord(BaseModel):
    """Value of c(g, x)."""

    schema_version: int = SCHEMA_VERSION
    g: str
    value: str


class ValidationRecord(BaseModel):
    """Validity certificate of a cocycle."""

    schema_version: int = SCHEMA_VERSION
    level: str
    relators_checked: int
    patterns_checked: int
    window: list[str]


# --- Run context ---


@dataclass
class RunContext:
    """Settings resolved for one command run: config file values under CLI flags."""

    config: "UntwistConfig"
    seed: int
    radius: int
    format: str
    out: str | None = None
