"""Construction of group contexts from ``GroupSpec`` documents."""

from typing import Any

from src.constants import (
    DEFAULT_BALL_CAP,
    DEFAULT_BFS_CAP,
    MAX_FACTOR_ORDER,
    MAX_FACTORS,
    MAX_RANK,
)
from src.exceptions import (
    ParameterOutOfRangeError,
    ParseError,
    UnsupportedFamilyError,
)
from src.groups.base import GroupContext
from src.groups.free import FreeGroup
from src.groups.free_abelian import FreeAbelianGroup
from src.groups.free_product import FreeProductCyclicGroup
from src.groups.heisenberg import HeisenbergGroup
from src.groups.types import GroupFamily
from src.records import GroupSpec


def _check_range(name: str, value: int, low: int, high: int) -> int:
    if not low <= value <= high:
        raise ParameterOutOfRangeError(name, value, low, high)
    return value


def _scalar_param(params: Any, key: str) -> int:
    if isinstance(params, dict):
        params = params.get(key)
    if not isinstance(params, int) or isinstance(params, bool):
        raise ParameterOutOfRangeError(key, -1, 1, MAX_RANK)
    return params


def _orders_param(params: Any) -> tuple[int, ...]:
    if isinstance(params, dict):
        params = params.get("orders")
    if not isinstance(params, list | tuple):
        raise ParameterOutOfRangeError("k", 0, 2, MAX_FACTORS)
    for n in params:
        if not isinstance(n, int) or isinstance(n, bool):
            raise ParseError("factor order", repr(n))
    return tuple(params)


def make_group(
    spec: GroupSpec,
    *,
    ball_cap: int = DEFAULT_BALL_CAP,
    bfs_cap: int = DEFAULT_BFS_CAP,
) -> GroupContext:
    """
    Build the group context described by ``spec``.

    Args:
        spec: Family and parameters.
        ball_cap: Element cap for ``ball``.
        bfs_cap: Element cap for breadth-first word lengths.

    Returns:
        The group context.

    Raises:
        UnsupportedFamilyError: If the family is unknown.
        ParameterOutOfRangeError: If a parameter is outside its bounds.
    """
    try:
        family = GroupFamily(spec.family)
    except ValueError as e:
        raise UnsupportedFamilyError(spec.family) from e

    caps = {"ball_cap": ball_cap, "bfs_cap": bfs_cap}
    if family == GroupFamily.FREE_ABELIAN:
        rank = _check_range("d", _scalar_param(spec.params, "d"), 1, MAX_RANK)
        return FreeAbelianGroup(rank, **caps)
    if family == GroupFamily.FREE:
        rank = _check_range("r", _scalar_param(spec.params, "r"), 1, MAX_RANK)
        return FreeGroup(rank, **caps)
    if family == GroupFamily.FREE_PRODUCT_CYCLIC:
        orders = _orders_param(spec.params)
        _check_range("k", len(orders), 2, MAX_FACTORS)
        for n in orders:
            _check_range("n_i", n, 2, MAX_FACTOR_ORDER)
        return FreeProductCyclicGroup(orders, **caps)
    return HeisenbergGroup(**caps)


def group_spec_of(group: GroupContext) -> GroupSpec:
    """The ``GroupSpec`` that rebuilds ``group``."""
    if isinstance(group, FreeAbelianGroup):
        return GroupSpec(family=group.family, params={"d": group.rank})
    if isinstance(group, FreeGroup):
        return GroupSpec(family=group.family, params={"r": group.rank})
    if isinstance(group, FreeProductCyclicGroup):
        return GroupSpec(family=group.family, params={"orders": list(group.orders)})
    return GroupSpec(family=group.family, params={})
