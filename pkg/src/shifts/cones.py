"""Forward and backward cones ``P^±(a, r) = {a^{±k} : k >= 0} B(r)``."""

from src.groups import Elem, GroupContext


def _direction(group: GroupContext, a: Elem, sign: int) -> Elem:
    return a if sign >= 0 else group.inverse(a)


def in_cone(group: GroupContext, a: Elem, r: int, sign: int, g: Elem) -> bool:
    """
    Decide ``g in P^+(a, r)`` (``sign >= 0``) or ``g in P^-(a, r)``.

    Only ``k`` below the escape index of ``ℓ(g) + r`` can satisfy
    ``ℓ(a^-k g) <= r``, since ``ℓ(a^-k g) >= ℓ(a^k) - ℓ(g)``.

    Raises:
        TorsionElementError: If ``a`` has finite order.
    """
    step = _direction(group, a, sign)
    bound = group.escape_index(step, group.word_length(g) + r)
    back = group.inverse(step)
    point = g
    for _ in range(bound):
        if group.within(point, r):
            return True
        point = group.multiply(back, point)
    return False


def cone_elements(
    group: GroupContext, a: Elem, r: int, sign: int, radius: int
) -> set[Elem]:
    """``P^±(a, r) ∩ B(radius)`` enumerated exactly."""
    step = _direction(group, a, sign)
    bound = group.escape_index(step, radius + r)
    inner = group.ball(r).elements
    found: set[Elem] = set()
    power = group.identity
    for _ in range(bound):
        for h in inner:
            g = group.multiply(power, h)
            if group.within(g, radius):
                found.add(g)
        power = group.multiply(power, step)
    return found


def specification_n(group: GroupContext, a: Elem, r: int) -> int:
    """
    Agreement radius N(a, r) with ``P^+(a, r) ∩ P^-(a, r) ⊆ B(N)``.

    ``N = sum_{i=0}^{M} ℓ(a^i) + r`` where ``M = max{n >= 0 : a^n in B(2r)}``.

    Raises:
        TorsionElementError: If ``a`` has finite order.
    """
    bound = group.escape_index(a, 2 * r)
    lengths: list[int] = []
    top = 0
    power = group.identity
    for n in range(bound):
        length = group.word_length(power)
        lengths.append(length)
        if length <= 2 * r:
            top = n
        power = group.multiply(power, a)
    return sum(lengths[: top + 1]) + r
