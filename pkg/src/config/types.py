"""Type definitions for untwist configuration."""

from typing import TypedDict


class CapsDict(TypedDict, total=False):
    """Structure of the caps section in .untwist.toml."""

    ball_elements: int
    bfs_elements: int
    relator_patterns: int
    transfer_patterns: int
    strict: bool


class BatteryDict(TypedDict, total=False):
    """Structure of the battery section in .untwist.toml."""

    exhaustive_radius: int
    random_pairs: int
    random_radius: int
    verify_samples: int
    relator_samples: int


class EndsDict(TypedDict, total=False):
    """Structure of the ends section in .untwist.toml."""

    schedule: list[list[int]]


class RunDict(TypedDict, total=False):
    """Structure of the run section in .untwist.toml."""

    seed: int
    radius: int
    format: str


class ConfigDataDict(TypedDict, total=False):
    """Structure of .untwist.toml file."""

    caps: CapsDict
    battery: BatteryDict
    ends: EndsDict
    run: RunDict
