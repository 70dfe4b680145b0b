"""Configuration merging logic for untwist."""

from typing import Any


def merge_config(base: dict[str, Any], override: dict[str, Any]) -> None:
    """
    Merge override config into base config (in-place).

    Dicts are merged recursively; every other value (lists included, since a
    radius schedule is only meaningful as a whole) replaces the base value.

    Args:
        base: Base configuration dictionary (modified in-place).
        override: Override configuration to merge in.
    """
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            merge_config(base[key], value)
        else:
            base[key] = value
