"""Shift spaces: configurations, subshifts, cones and specification witnesses."""

from src.shifts.cones import cone_elements, in_cone, specification_n
from src.shifts.configuration import (
    Alphabet,
    Configuration,
    HomoclinicPair,
    Pattern,
    PeriodicConfiguration,
    restrict,
    shift_action,
)
from src.shifts.periodize import periodize_zd, separation_set
from src.shifts.sampling import random_configuration
from src.shifts.subshift import (
    DensityReport,
    ShiftKind,
    SubshiftSpec,
    density_check,
    enumerate_patterns,
    full_shift,
    golden_mean,
    golden_mean_isolated,
    locally_admissible,
    membership,
    periodic_membership,
    sft,
)
from src.shifts.witness import (
    GlueResult,
    Witness,
    glue_check,
    golden_mean_agreement_radius,
    witness,
    witness_full_shift,
    witness_golden_mean,
)

__all__ = [
    "Alphabet",
    "Configuration",
    "DensityReport",
    "GlueResult",
    "HomoclinicPair",
    "Pattern",
    "PeriodicConfiguration",
    "ShiftKind",
    "SubshiftSpec",
    "Witness",
    "cone_elements",
    "density_check",
    "enumerate_patterns",
    "full_shift",
    "glue_check",
    "golden_mean",
    "golden_mean_agreement_radius",
    "golden_mean_isolated",
    "in_cone",
    "locally_admissible",
    "membership",
    "periodic_membership",
    "periodize_zd",
    "random_configuration",
    "restrict",
    "separation_set",
    "sft",
    "shift_action",
    "specification_n",
    "witness",
    "witness_full_shift",
    "witness_golden_mean",
]
