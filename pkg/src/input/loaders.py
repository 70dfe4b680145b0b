"""Loading JSON documents into groups, shifts, configurations and cocycles.

Every ``--group/--shift/--cocycle`` file may be a plain document or a bundle
(``{"schema_version", "group", "shift", "cocycle"}``); the matching key is taken.
"""

import json
import random
from pathlib import Path
from typing import Any, TypeVar

from pydantic import BaseModel, ValidationError

from src.cocycles import CheckBudget, LetterRule, LocalCocycle, make_local_cocycle
from src.coeff import CoeffGroup, make_coeff_group
from src.config import UntwistConfig
from src.exceptions import ParseError
from src.groups import Elem, GroupContext, make_group
from src.records import (
    CocycleDocument,
    ConfigurationDocument,
    GroupSpec,
    ShiftDocument,
)
from src.shifts import (
    Alphabet,
    Configuration,
    ShiftKind,
    SubshiftSpec,
    full_shift,
    golden_mean,
    golden_mean_isolated,
    sft,
)

DocumentT = TypeVar("DocumentT", bound=BaseModel)


def _is_bundle(data: Any) -> bool:
    return isinstance(data, dict) and "schema_version" in data and "group" in data


def read_document(path: str | Path) -> Any:
    """
    Read a JSON file.

    Raises:
        ParseError: If the file cannot be read or is not valid JSON.
    """
    try:
        return json.loads(Path(path).read_text())
    except OSError as e:
        raise ParseError("document", f"{path}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise ParseError("JSON", f"{path}: {e.msg} at line {e.lineno}") from e


def parse_document(data: Any, model: type[DocumentT], key: str) -> DocumentT:
    """Validate ``data`` (or ``data[key]`` for a bundle) against ``model``."""
    if _is_bundle(data):
        data = data.get(key)
    if data is None:
        raise ParseError(key, "bundle has no such section")
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise ParseError(key, str(e.errors()[0]["msg"])) from e


def group_from_document(spec: GroupSpec, config: UntwistConfig) -> GroupContext:
    return make_group(
        spec, ball_cap=config.caps.ball_elements, bfs_cap=config.caps.bfs_elements
    )


def _elements(group: GroupContext, names: list[str]) -> tuple[Elem, ...]:
    return tuple(group.parse_element(name) for name in names)


def shift_from_document(group: GroupContext, doc: ShiftDocument) -> SubshiftSpec:
    """
    Build the subshift described by ``doc``.

    Raises:
        ParseError: If the kind is unknown or a window element or symbol does
            not parse.
    """
    try:
        kind = ShiftKind(doc.kind)
    except ValueError as e:
        raise ParseError("shift kind", doc.kind) from e

    if kind == ShiftKind.GOLDEN_MEAN:
        k = doc.k if doc.k is not None else len(doc.alphabet) - 1
        if not doc.windows:
            return golden_mean_isolated(group, k)
        windows = [_elements(group, window) for window in doc.windows]
        return golden_mean(group, windows, k)

    alphabet = Alphabet.of(doc.alphabet, doc.background)
    if kind == ShiftKind.SFT:
        return sft(group, alphabet, _elements(group, doc.window), doc.allowed)
    return full_shift(group, alphabet)


def configuration_from_document(
    group: GroupContext, shift: SubshiftSpec, doc: ConfigurationDocument
) -> Configuration:
    """A finite-overlay configuration over the shift's alphabet."""
    overlay = {group.parse_element(g): symbol for g, symbol in doc.overlay}
    return Configuration.build(group, shift.alphabet, overlay, doc.background)


def _rule(
    group: GroupContext,
    shift: SubshiftSpec,
    coeff: CoeffGroup,
    window: tuple[Elem, ...],
    rows: list[tuple[list[str], Any]],
    name: str,
) -> LetterRule:
    table: dict[tuple[str, ...], Any] = {}
    for symbols, value in rows:
        if len(symbols) != len(window):
            raise ParseError(f"rule row for {name}", ",".join(symbols))
        key = tuple(shift.alphabet.require(symbol) for symbol in symbols)
        table[key] = coeff.parse(value)
    return LetterRule(window, table)


def cocycle_from_document(
    group: GroupContext,
    shift: SubshiftSpec,
    doc: CocycleDocument,
    config: UntwistConfig,
    rng: random.Random,
) -> LocalCocycle:
    """
    Parse and validate a cocycle.

    Raises:
        ParseError: If a window, symbol or value does not parse.
        RelatorViolationError: If a relator fails on some admissible pattern.
        InverseInconsistencyError: If rules for ``s`` and ``s^-1`` disagree.
    """
    coeff = make_coeff_group(doc.coeff)
    default_window = _elements(group, doc.window)
    rules = {}
    for name, rows in doc.rules.items():
        group.letter(name)
        window = (
            _elements(group, doc.windows[name])
            if name in doc.windows
            else default_window
        )
        rules[name] = _rule(group, shift, coeff, window, rows, name)
    return make_local_cocycle(
        group,
        shift,
        coeff,
        rules,
        budget=CheckBudget(
            config.caps.relator_patterns,
            config.battery.relator_samples,
            config.caps.strict,
        ),
        rng=rng,
    )


def load_group(path: str | Path, config: UntwistConfig) -> GroupContext:
    return group_from_document(
        parse_document(read_document(path), GroupSpec, "group"), config
    )


def load_shift(path: str | Path | None, group: GroupContext) -> SubshiftSpec:
    """The shift in ``path``, or the full 2-shift when no file is given."""
    doc = (
        ShiftDocument()
        if path is None
        else parse_document(read_document(path), ShiftDocument, "shift")
    )
    return shift_from_document(group, doc)


def load_configuration(
    path: str | Path, group: GroupContext, shift: SubshiftSpec
) -> Configuration:
    doc = parse_document(read_document(path), ConfigurationDocument, "configuration")
    return configuration_from_document(group, shift, doc)


def load_cocycle(
    path: str | Path,
    group: GroupContext,
    shift: SubshiftSpec,
    config: UntwistConfig,
    rng: random.Random,
) -> LocalCocycle:
    doc = parse_document(read_document(path), CocycleDocument, "cocycle")
    return cocycle_from_document(group, shift, doc, config, rng)


def has_bundle_section(path: str | Path, key: str) -> bool:
    """Whether ``path`` is a bundle carrying a ``key`` section."""
    data = read_document(path)
    return _is_bundle(data) and data.get(key) is not None
