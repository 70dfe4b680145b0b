"""TOML configuration loading logic for untwist."""

import sys
from pathlib import Path
from typing import Any, TypeVar, cast

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib  # type: ignore

from pydantic import BaseModel, ValidationError

from src.config.merger import merge_config
from src.config.models import (
    BatteryConfig,
    CapsConfig,
    EndsConfig,
    RunDefaults,
    UntwistConfig,
)
from src.config.types import ConfigDataDict
from src.constants import DEFAULT_CONFIG_FILE
from src.file_utils import find_repo_root

T = TypeVar("T", bound=BaseModel)


def _validate_config_section(
    config_data: ConfigDataDict,
    section_name: str,
    model_class: type[T],
) -> T:
    """
    Validate and construct a config section with clear error messages.

    Raises:
        ValueError: If the configuration fails validation.
    """
    try:
        return model_class(**config_data.get(section_name, {}))
    except ValidationError as e:
        raise ValueError(f"Invalid {section_name} configuration: {e}") from e


def load_config(*, start_path: str = ".") -> UntwistConfig:
    """
    Load untwist configuration from .untwist.toml files.

    Searches for config files in this order (later configs override earlier):
    1. Repository root .untwist.toml
    2. ``start_path`` .untwist.toml

    Args:
        start_path: Directory the command runs in.

    Returns:
        UntwistConfig with merged configuration from all sources.
    """
    config_data: ConfigDataDict = {"caps": {}, "battery": {}, "ends": {}, "run": {}}

    repo_root = find_repo_root(start_path)
    seen: set[Path] = set()
    for directory in (repo_root, start_path):
        if directory is None:
            continue
        path = (Path(directory) / DEFAULT_CONFIG_FILE).resolve()
        if path not in seen:
            seen.add(path)
            _load_and_merge_config(path, config_data)

    return UntwistConfig(
        caps=_validate_config_section(config_data, "caps", CapsConfig),
        battery=_validate_config_section(config_data, "battery", BatteryConfig),
        ends=_validate_config_section(config_data, "ends", EndsConfig),
        run=_validate_config_section(config_data, "run", RunDefaults),
    )


def _load_and_merge_config(config_path: Path, base_config: ConfigDataDict) -> None:
    """Load a TOML config file (if present) and merge it into ``base_config``."""
    if config_path.exists():
        with open(config_path, "rb") as f:
            config_data = tomllib.load(f)
            merge_config(cast(dict[str, Any], base_config), config_data)
