"""Configuration loading for untwist caps, batteries and run defaults."""

from src.config.loader import load_config
from src.config.models import (
    BatteryConfig,
    CapsConfig,
    EndsConfig,
    RunDefaults,
    UntwistConfig,
)

__all__ = [
    "BatteryConfig",
    "CapsConfig",
    "EndsConfig",
    "RunDefaults",
    "UntwistConfig",
    "load_config",
]
