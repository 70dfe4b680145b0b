"""Replayable certificates: obstructions and validity levels."""

from dataclasses import dataclass, field
from enum import Enum

from src.coeff import HElem
from src.groups import Elem, Word
from src.shifts import Configuration, Pattern


class ObstructionKind(str, Enum):
    PLUS_MINUS = "PlusMinusMismatch"
    CROSS_DIRECTION = "CrossDirectionMismatch"
    FIXED_POINT = "FixedPointMismatch"
    RELATOR = "RelatorViolation"


@dataclass(frozen=True)
class ObstructionCertificate:
    """
    A violated necessary condition for triviality, with everything needed to
    re-evaluate it.

    PlusMinus: ``configurations = (x, x')``, ``directions = (g,)``,
    ``values = (plus, minus)``. CrossDirection: ``directions = (g, h)``.
    FixedPoint: ``configurations = (x_1, x_2)`` constant, ``directions = (g,)``.
    Relator: ``relator`` and ``pattern``, ``values = (c(w, x),)``.
    """

    kind: ObstructionKind
    directions: tuple[Elem, ...] = ()
    configurations: tuple[Configuration, ...] = ()
    values: tuple[HElem, ...] = ()
    relator: Word | None = None
    pattern: Pattern | None = field(default=None, compare=False)


class ValidityLevel(str, Enum):
    TRIVIAL = "trivial"
    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"
    BY_CONSTRUCTION = "by_construction"
    UNCHECKED = "unchecked"


@dataclass(frozen=True)
class ValidityCertificate:
    """How the cocycle identity along relators was established."""

    level: ValidityLevel
    relators_checked: int = 0
    patterns_checked: int = 0
