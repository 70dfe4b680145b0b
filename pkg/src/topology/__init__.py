"""Cayley-graph topology: annulus components, end estimates, outside-ball paths."""

from src.topology.ends import (
    Component,
    EndEntry,
    EndReport,
    EndVerdict,
    complement_components,
    estimate_ends,
    path_outside_ball,
    replay_path,
)

__all__ = [
    "Component",
    "EndEntry",
    "EndReport",
    "EndVerdict",
    "complement_components",
    "estimate_ends",
    "path_outside_ball",
    "replay_path",
]
