"""Pydantic models for untwist configuration."""

from typing import Literal

from pydantic import BaseModel, Field, field_validator

from src.constants import (
    DEFAULT_BALL_CAP,
    DEFAULT_BFS_CAP,
    DEFAULT_END_SCHEDULE,
    DEFAULT_EXHAUSTIVE_RADIUS,
    DEFAULT_RANDOM_PAIRS,
    DEFAULT_RANDOM_RADIUS,
    DEFAULT_RELATOR_CAP,
    DEFAULT_RELATOR_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_TRANSFER_CAP,
    DEFAULT_TRANSFER_RADIUS,
    DEFAULT_VERIFY_SAMPLES,
)


class CapsConfig(BaseModel):
    """Element and pattern caps for exact enumeration."""

    ball_elements: int = Field(
        default=DEFAULT_BALL_CAP,
        description="Largest ball (in elements) that may be enumerated",
        gt=0,
    )
    bfs_elements: int = Field(
        default=DEFAULT_BFS_CAP,
        description="Largest breadth-first table used for word lengths",
        gt=0,
    )
    relator_patterns: int = Field(
        default=DEFAULT_RELATOR_CAP,
        description="Pattern count above which relator checks are sampled",
        gt=0,
    )
    transfer_patterns: int = Field(
        default=DEFAULT_TRANSFER_CAP,
        description="Pattern count above which transfer maps are evaluated on demand",
        gt=0,
    )
    strict: bool = Field(
        default=False,
        description="Fail instead of sampling when relator_patterns is exceeded",
    )


class BatteryConfig(BaseModel):
    """Sizes of the pair and sample batteries used by the tests of triviality."""

    exhaustive_radius: int = Field(default=DEFAULT_EXHAUSTIVE_RADIUS, ge=0)
    random_pairs: int = Field(default=DEFAULT_RANDOM_PAIRS, ge=0)
    random_radius: int = Field(default=DEFAULT_RANDOM_RADIUS, ge=0)
    verify_samples: int = Field(default=DEFAULT_VERIFY_SAMPLES, ge=0)
    relator_samples: int = Field(default=DEFAULT_RELATOR_SAMPLES, ge=0)


class EndsConfig(BaseModel):
    """Radius schedule for end estimation."""

    schedule: list[tuple[int, int]] = Field(
        default_factory=lambda: [tuple(pair) for pair in DEFAULT_END_SCHEDULE],
        description="(inner, outer) radius pairs, increasing",
        min_length=1,
    )

    @field_validator("schedule")
    @classmethod
    def _inner_below_outer(cls, value: list[tuple[int, int]]):
        for inner, outer in value:
            if not 0 <= inner < outer:
                raise ValueError(f"schedule entry ({inner}, {outer}) needs 0 <= l < R")
        return value


class RunDefaults(BaseModel):
    """Defaults for command runs."""

    seed: int = Field(default=DEFAULT_SEED)
    radius: int = Field(
        default=DEFAULT_TRANSFER_RADIUS,
        description="Radius R of the transfer table B(R)",
        ge=0,
    )
    format: Literal["json", "text"] = Field(default="json")


class UntwistConfig(BaseModel):
    """Root configuration for untwist."""

    caps: CapsConfig = Field(default_factory=CapsConfig)
    battery: BatteryConfig = Field(default_factory=BatteryConfig)
    ends: EndsConfig = Field(default_factory=EndsConfig)
    run: RunDefaults = Field(default_factory=RunDefaults)
