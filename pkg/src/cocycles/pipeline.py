"""The untwisting pipeline.

Stages, in order:

1. choose non-torsion directions ``g`` (and ``h`` when there is a second one),
2. build a battery of homoclinic pairs,
3. plus/minus, cross-direction and fixed-point tests,
4. tabulate the transfer map along ``g``,
5. compare it with the table along ``h``,
6. extract the homomorphism,
7. verify the cohomology equation on a residual battery.

Any certificate from stage 3 or 5 ends the run with ``ObstructionFound``; the
verdict kind is the first certificate found. ``Untwisted`` needs every stage
to pass with zero residual failures.
"""

import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from src.cocycles.certificates import (
    ObstructionCertificate,
    ObstructionKind,
    ValidityCertificate,
)
from src.cocycles.homomorphism import Homomorphism
from src.cocycles.limits import battery_tests
from src.cocycles.local import LocalCocycle
from src.cocycles.obstructions import fixed_point_obstruction
from src.cocycles.transfer import (
    NonConstantCertificate,
    ResidualReport,
    TransferMap,
    TransferMode,
    extract_homomorphism,
    transfer_map,
    untwist_radius,
    verify_untwist,
)
from src.coeff import HElem
from src.constants import (
    DEFAULT_EXHAUSTIVE_RADIUS,
    DEFAULT_RANDOM_PAIRS,
    DEFAULT_RANDOM_RADIUS,
    DEFAULT_TRANSFER_CAP,
    DEFAULT_TRANSFER_RADIUS,
    DEFAULT_VERIFY_SAMPLES,
    MIXING_ASSUMPTION,
)
from src.exceptions import PatternNotAdmissibleError
from src.groups import Elem, GroupContext
from src.shifts import (
    Configuration,
    GlueResult,
    HomoclinicPair,
    ShiftKind,
    enumerate_patterns,
    glue_check,
    membership,
    random_configuration,
)

# Directions are searched for among short elements when no letter has infinite order
_DIRECTION_SEARCH_RADIUS = 2

# Verification elements are drawn from B(min(3, R))
_VERIFY_ELEMENT_RADIUS = 3


class UntwistVerdict(str, Enum):
    UNTWISTED = "Untwisted"
    OBSTRUCTION = "ObstructionFound"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class UntwistSettings:
    """Radii and battery sizes for one run."""

    radius: int = DEFAULT_TRANSFER_RADIUS
    exhaustive_radius: int = DEFAULT_EXHAUSTIVE_RADIUS
    random_pairs: int = DEFAULT_RANDOM_PAIRS
    random_radius: int = DEFAULT_RANDOM_RADIUS
    verify_samples: int = DEFAULT_VERIFY_SAMPLES
    transfer_cap: int = DEFAULT_TRANSFER_CAP


@dataclass(frozen=True)
class TransferReport:
    """Outcome of ``untwist``: the recovered pair ``(T, φ)`` or the reason not."""

    verdict: UntwistVerdict
    directions: tuple[Elem, ...]
    background: Configuration
    radius: int
    validity: ValidityCertificate
    transfer: TransferMap | None = None
    homomorphism: Homomorphism | None = None
    residuals: ResidualReport | None = None
    certificates: tuple[ObstructionCertificate, ...] = ()
    non_constant: NonConstantCertificate | None = None
    notes: tuple[str, ...] = ()
    assumptions: tuple[str, ...] = ()
    glue: GlueResult | None = field(default=None, repr=False)

    @property
    def obstruction(self) -> ObstructionKind | None:
        return self.certificates[0].kind if self.certificates else None


def choose_directions(group: GroupContext) -> tuple[Elem, ...]:
    """
    Up to two non-torsion directions ``g, h`` with ``h ∉ {g, g^-1}``.

    Letters come first (one per inverse pair); otherwise the shortest
    non-torsion elements of a small ball are used.
    """
    candidates = [
        letter.value
        for letter in group.letters
        if letter.index < letter.inverse_index
    ]
    candidates += list(group.ball(_DIRECTION_SEARCH_RADIUS).elements)
    chosen: list[Elem] = []
    for a in candidates:
        if a == group.identity or group.is_torsion(a).is_torsion:
            continue
        if any(a in (b, group.inverse(b)) for b in chosen):
            continue
        chosen.append(a)
        if len(chosen) == 2:
            break
    return tuple(chosen)


def build_pair_battery(
    c: LocalCocycle,
    background: Configuration,
    settings: UntwistSettings,
    rng: random.Random,
) -> list[HomoclinicPair]:
    """
    Every admissible pattern on ``B(exhaustive_radius)`` against ``x̄``, then
    random pairs with support in ``B(random_radius)``.
    """
    group, shift = c.group, c.shift
    pairs: list[HomoclinicPair] = []
    cells = group.ball(settings.exhaustive_radius).elements
    if len(shift.alphabet) ** len(cells) <= settings.transfer_cap:
        for pattern in enumerate_patterns(cells, shift.alphabet, settings.transfer_cap):
            x = background.with_overlay(pattern)
            if not x.is_constant() and membership(shift, x):
                pairs.append(HomoclinicPair(x, background))
    elements = group.ball(settings.random_radius).elements
    for _ in range(settings.random_pairs):
        first = random_configuration(shift, background, elements, rng)
        second = random_configuration(shift, background, elements, rng)
        pairs.append(HomoclinicPair(first, second))
    return pairs


def _samples(
    c: LocalCocycle,
    background: Configuration,
    radius: int,
    count: int,
    rng: random.Random,
) -> list[Configuration]:
    if radius < 0:
        return [background]
    elements = c.group.ball(radius).elements
    return [background] + [
        random_configuration(c.shift, background, elements, rng) for _ in range(count)
    ]


def _residual_battery(
    c: LocalCocycle,
    background: Configuration,
    radius: int,
    count: int,
    rng: random.Random,
) -> list[tuple[Elem, Configuration]]:
    """``g ∈ B(min(3, R))`` with ``x`` supported in ``B(R - ℓ(g))``."""
    group = c.group
    ball = group.ball(min(_VERIFY_ELEMENT_RADIUS, radius))
    battery = []
    for _ in range(count):
        g = rng.choice(ball.elements)
        elements = group.ball(radius - ball.length(g)).elements
        battery.append((g, random_configuration(c.shift, background, elements, rng)))
    return battery


def _mismatch(
    first: TransferMap,
    second: TransferMap,
    x: Configuration,
    values: tuple[HElem, HElem],
) -> ObstructionCertificate:
    return ObstructionCertificate(
        ObstructionKind.CROSS_DIRECTION,
        directions=(first.direction, second.direction),
        configurations=(x, first.background),
        values=values,
    )


def _compare_tables(
    first: TransferMap, second: TransferMap, samples: list[Configuration]
) -> ObstructionCertificate | None:
    """``b_g(x) = b_h(x)`` on the table (on the samples in on-demand mode).

    Both tables are keyed by the same ball, so they are compared key by key.
    """
    if first.mode == TransferMode.TABLE and second.mode == TransferMode.TABLE:
        for key, along_g in first.table.items():
            along_h = second.table[key]
            if along_g != along_h:
                x = first.configuration(key)
                return _mismatch(first, second, x, (along_g, along_h))
        return None
    for x in samples:
        along_g, along_h = first.limit_value(x), second.limit_value(x)
        if along_g != along_h:
            return _mismatch(first, second, x, (along_g, along_h))
    return None


def _glue_evidence(c: LocalCocycle, g: Elem) -> GlueResult:
    """Glue the isolated pattern ``{e: 1}`` to itself far along ``g``."""
    group, shift = c.group, c.shift
    r = 1
    far = group.power(g, group.escape_index(g, 2 * r + 2 * shift.window_radius()))
    pattern = {group.identity: shift.alphabet.symbols[1]}
    try:
        return glue_check(shift, pattern, pattern, far, r)
    except PatternNotAdmissibleError:
        return GlueResult(ok=False, reason="pattern_not_admissible")


def _transfer_notes(
    c: LocalCocycle, g: Elem, transfer: TransferMap, settings: UntwistSettings
) -> list[str]:
    notes: list[str] = []
    if transfer.mode == TransferMode.ON_DEMAND:
        notes.append("transfer table too large; evaluated on demand")
    if c.shift.kind != ShiftKind.SFT:
        needed = untwist_radius(c, g)
        if settings.radius < needed:
            notes.append(
                f"transfer radius R={settings.radius} below untwist radius N={needed}"
            )
    return notes


def _transfer_stages(
    c: LocalCocycle,
    directions: tuple[Elem, ...],
    x_bar: Configuration,
    settings: UntwistSettings,
    rng: random.Random,
    report: dict[str, Any],
) -> TransferReport:
    """Stages 4 to 7, once the battery found no obstruction."""
    g = directions[0]
    transfer = transfer_map(c, g, x_bar, settings.radius, cap=settings.transfer_cap)
    notes = _transfer_notes(c, g, transfer, settings)
    samples = _samples(c, x_bar, settings.radius - 1, settings.verify_samples, rng)
    if len(directions) == 2:
        other = transfer_map(
            c, directions[1], x_bar, settings.radius, cap=settings.transfer_cap
        )
        mismatch = _compare_tables(transfer, other, samples)
        if mismatch is not None:
            return TransferReport(
                UntwistVerdict.OBSTRUCTION,
                directions,
                transfer=transfer,
                certificates=(mismatch,),
                notes=tuple(notes),
                **report,
            )

    phi = extract_homomorphism(c, transfer, samples)
    if isinstance(phi, NonConstantCertificate):
        notes.append("L(s) is not constant on the samples")
        return TransferReport(
            UntwistVerdict.INCONCLUSIVE,
            directions,
            transfer=transfer,
            non_constant=phi,
            notes=tuple(notes),
            **report,
        )

    battery = _residual_battery(
        c, x_bar, settings.radius, settings.verify_samples, rng
    )
    residuals = verify_untwist(c, transfer, phi, battery)
    verdict = UntwistVerdict.UNTWISTED
    if not residuals.ok:
        verdict = UntwistVerdict.INCONCLUSIVE
        notes.append(f"{len(residuals.failures)} residual failures")
    return TransferReport(
        verdict,
        directions,
        transfer=transfer,
        homomorphism=phi,
        residuals=residuals,
        notes=tuple(notes),
        **report,
    )


def untwist(
    c: LocalCocycle,
    *,
    settings: UntwistSettings | None = None,
    background: str | None = None,
    rng: random.Random | None = None,
) -> TransferReport:
    """
    Decide whether ``c`` is cohomologous to a homomorphism and recover ``(T, φ)``.

    Raises:
        BackgroundNotAdmissibleError: If the background is not a point of X.
        BudgetError: From any stage whose caps are too small.
    """
    settings = settings or UntwistSettings()
    rng = rng or random.Random(0)
    group, shift = c.group, c.shift
    symbol = shift.alphabet.background if background is None else background
    shift.require_background(symbol)
    x_bar = Configuration.build(group, shift.alphabet, {}, symbol)
    report: dict[str, Any] = {
        "background": x_bar,
        "radius": settings.radius,
        "validity": c.certificate,
        "assumptions": (MIXING_ASSUMPTION,),
    }

    directions = choose_directions(group)
    if not directions:
        return TransferReport(
            UntwistVerdict.INCONCLUSIVE,
            (),
            notes=("no element of infinite order found",),
            **report,
        )
    if shift.kind == ShiftKind.GOLDEN_MEAN:
        report["glue"] = _glue_evidence(c, directions[0])

    pairs = build_pair_battery(c, x_bar, settings, rng)
    found = [*battery_tests(c, directions, pairs), fixed_point_obstruction(c)]
    certificates = tuple(cert for cert in found if cert is not None)
    if certificates:
        return TransferReport(
            UntwistVerdict.OBSTRUCTION, directions, certificates=certificates, **report
        )
    return _transfer_stages(c, directions, x_bar, settings, rng, report)
