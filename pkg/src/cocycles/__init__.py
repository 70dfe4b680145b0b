"""Cocycle engine: local cocycles, limit cocycles, obstructions and untwisting."""

from src.cocycles.certificates import (
    ObstructionCertificate,
    ObstructionKind,
    ValidityCertificate,
    ValidityLevel,
)
from src.cocycles.examples import (
    CoboundaryInstance,
    example_cocycle_free,
    example_cocycle_z,
    non_extension_rules,
    random_coboundary_instance,
    random_transfer_rule,
)
from src.cocycles.homomorphism import (
    Homomorphism,
    homomorphism_from_values,
    trivial_homomorphism,
)
from src.cocycles.limits import (
    DirectionProfile,
    battery_tests,
    cross_direction_test,
    direction_profile,
    displayed_limit,
    limit_minus,
    limit_plus,
    path_transport,
    plus_minus_test,
    separation_radius,
    stabilization_index,
    tail_product,
)
from src.cocycles.local import (
    CheckBudget,
    LetterRule,
    LocalCocycle,
    check_relators,
    coboundary_cocycle,
    dependency_window,
    evaluate,
    evaluate_word,
    homomorphism_cocycle,
    make_local_cocycle,
    power_word,
    twist_by_transfer,
)
from src.cocycles.obstructions import constant_points, fixed_point_obstruction, replay
from src.cocycles.pipeline import (
    TransferReport,
    UntwistSettings,
    UntwistVerdict,
    build_pair_battery,
    choose_directions,
    untwist,
)
from src.cocycles.transfer import (
    NonConstantCertificate,
    Residual,
    ResidualReport,
    TransferMap,
    TransferMode,
    extract_homomorphism,
    transfer_map,
    untwist_radius,
    verify_untwist,
)

__all__ = [
    "CheckBudget",
    "CoboundaryInstance",
    "DirectionProfile",
    "Homomorphism",
    "LetterRule",
    "LocalCocycle",
    "NonConstantCertificate",
    "ObstructionCertificate",
    "ObstructionKind",
    "Residual",
    "ResidualReport",
    "TransferMap",
    "TransferMode",
    "TransferReport",
    "UntwistSettings",
    "UntwistVerdict",
    "ValidityCertificate",
    "ValidityLevel",
    "battery_tests",
    "build_pair_battery",
    "check_relators",
    "choose_directions",
    "coboundary_cocycle",
    "constant_points",
    "cross_direction_test",
    "dependency_window",
    "direction_profile",
    "displayed_limit",
    "evaluate",
    "evaluate_word",
    "example_cocycle_free",
    "example_cocycle_z",
    "extract_homomorphism",
    "fixed_point_obstruction",
    "homomorphism_cocycle",
    "homomorphism_from_values",
    "limit_minus",
    "limit_plus",
    "make_local_cocycle",
    "non_extension_rules",
    "path_transport",
    "plus_minus_test",
    "power_word",
    "random_coboundary_instance",
    "random_transfer_rule",
    "replay",
    "separation_radius",
    "stabilization_index",
    "tail_product",
    "transfer_map",
    "trivial_homomorphism",
    "twist_by_transfer",
    "untwist",
    "untwist_radius",
    "verify_untwist",
]
