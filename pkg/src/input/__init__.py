"""Input handling: JSON documents and bundles into engine objects."""

from src.input.loaders import (
    cocycle_from_document,
    configuration_from_document,
    group_from_document,
    has_bundle_section,
    load_cocycle,
    load_configuration,
    load_group,
    load_shift,
    parse_document,
    read_document,
    shift_from_document,
)

__all__ = [
    "cocycle_from_document",
    "configuration_from_document",
    "group_from_document",
    "has_bundle_section",
    "load_cocycle",
    "load_configuration",
    "load_group",
    "load_shift",
    "parse_document",
    "read_document",
    "shift_from_document",
]
