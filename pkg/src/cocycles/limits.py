"""Limit cocycles on homoclinic pairs and the tests built on them.

For a non-torsion ``g`` and a homoclinic pair ``(x, x')`` with difference set
``D``, the products ``c(g^n, x)^-1 c(g^n, x')`` are constant for ``n >= N*``,
where ``N*`` is one past the last ``j`` with ``g^-j dep(g) ∩ D`` nonempty.
The minus limit is the plus limit along ``g^-1``.
"""

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

from src import constants
from src.cocycles.certificates import ObstructionCertificate, ObstructionKind
from src.cocycles.local import (
    LetterRule,
    LocalCocycle,
    Reader,
    dependency_window,
    evaluate_word,
    power_word,
    shifted_reader,
)
from src.coeff import HElem
from src.exceptions import LimitNotStableError, SeparationViolatedError
from src.groups import Elem, Word
from src.shifts import Configuration, HomoclinicPair


@dataclass(frozen=True)
class DirectionProfile:
    """
    Everything a limit along ``g`` needs that does not depend on the pair.

    ``hits[d]`` is the largest ``j < bound`` with ``d ∈ g^-j dep(g)``, which is
    the exact last hit for every ``d`` in ``B(reach)``. ``steps`` lists the rule
    and the cells read by each letter of ``g^bound`` in evaluation order; the
    first ``n * period`` of them evaluate ``g^n``.
    """

    direction: Elem
    reach: int
    bound: int
    period: int
    hits: Mapping[Elem, int] = field(repr=False)
    steps: tuple[tuple[LetterRule, tuple[Elem, ...]], ...] = field(repr=False)

    def last_hit(self, region: Iterable[Elem]) -> int:
        return max((self.hits.get(d, -1) for d in region), default=-1)

    def product(self, c: LocalCocycle, n: int, read: Reader) -> HElem:
        """``c(g^n, x)``."""
        if n > self.bound:
            return evaluate_word(c, power_word(c.group, self.direction, n), read)
        coeff = c.coeff
        value = coeff.identity
        for rule, cells in self.steps[: n * self.period]:
            value = coeff.multiply(rule.table[tuple(read(h) for h in cells)], value)
        return value


def _build_profile(c: LocalCocycle, g: Elem, reach: int) -> DirectionProfile:
    group = c.group
    group.require_non_torsion(g)
    word = group.spell(g)
    window = dependency_window(c, word)
    extra = max((group.word_length(w) for w in window), default=0)
    bound = group.escape_index(g, reach + extra)

    hits: dict[Elem, int] = {}
    step = group.inverse(g)
    point = group.identity
    for j in range(bound):
        for w in window:
            hits[group.multiply(point, w)] = j
        point = group.multiply(point, step)

    steps = []
    prefix = group.identity
    for letter in reversed(word * bound):
        rule = c.rule(letter)
        p_inverse = group.inverse(prefix)
        cells = tuple(group.multiply(p_inverse, w) for w in rule.window)
        steps.append((rule, cells))
        prefix = group.multiply(letter.value, prefix)
    return DirectionProfile(g, reach, bound, len(word), hits, tuple(steps))


def direction_profile(c: LocalCocycle, g: Elem, reach: int) -> DirectionProfile:
    """
    The profile of ``g`` for regions inside ``B(reach)``, memoized on ``c``.

    Raises:
        TorsionElementError: If ``g`` has finite order.
    """
    return c.memo.get_or_compute(
        ("profile", g, reach), lambda: _build_profile(c, g, reach)
    )


def _reach(c: LocalCocycle, region: Iterable[Elem]) -> int:
    return max((c.group.word_length(d) for d in region), default=0)


def last_hit(c: LocalCocycle, g: Elem, region: Iterable[Elem]) -> int:
    """
    Largest ``j >= 0`` with ``g^-j dep(g)`` meeting ``region`` (-1 if none).

    ``ℓ(g^j) > max ℓ(region) + max ℓ(dep)`` rules out every later ``j``, so only
    the indices below the escape index are checked.
    """
    region = set(region)
    if not region:
        return -1
    return direction_profile(c, g, _reach(c, region)).last_hit(region)


def stabilization_index(c: LocalCocycle, g: Elem, pair: HomoclinicPair) -> int:
    """Least ``N*`` from which ``c(g^n, x)^-1 c(g^n, x')`` no longer changes."""
    c.group.require_non_torsion(g)
    return last_hit(c, g, pair.difference) + 1


def tail_product(c: LocalCocycle, g: Elem, n: int, pair: HomoclinicPair) -> HElem:
    """``c(g^n, x)^-1 c(g^n, x')``."""
    word = power_word(c.group, g, n)
    first = evaluate_word(c, word, pair.first.at)
    second = evaluate_word(c, word, pair.second.at)
    return c.coeff.divide_left(first, second)


def power_value(
    c: LocalCocycle, profile: DirectionProfile, n: int, x: Configuration
) -> HElem:
    """``c(g^n, x)``; constant configurations are memoized on ``c``."""
    if not x.is_constant():
        return profile.product(c, n, x.at)
    key = ("constant", profile.direction, x.background, n)
    return c.memo.get_or_compute(key, lambda: profile.product(c, n, x.at))


def _check_stable(
    c: LocalCocycle, g: Elem, n: int, pair: HomoclinicPair, value: HElem
) -> None:
    """Recompute the tail product on ``[N*, N* + LIMIT_CHECK_WINDOW]``."""
    for m in range(n + 1, n + constants.LIMIT_CHECK_WINDOW + 1):
        if tail_product(c, g, m, pair) != value:
            raise LimitNotStableError(c.group.format_element(g), n, m)


def limit_plus(c: LocalCocycle, g: Elem, pair: HomoclinicPair) -> HElem:
    """
    ``c^{(g),+}(x, x') = lim c(g^n, x)^-1 c(g^n, x')``, exactly.

    With ``constants.DEBUG_LIMIT_CHECKS`` set, the value is also recomputed
    past the stabilization index.

    Raises:
        TorsionElementError: If ``g`` has finite order.
        LimitNotStableError: In debug mode, if the tail product still changes.
    """
    c.group.require_non_torsion(g)
    difference = pair.difference
    profile = direction_profile(c, g, _reach(c, difference))
    n = profile.last_hit(difference) + 1
    value = c.coeff.divide_left(
        power_value(c, profile, n, pair.first),
        power_value(c, profile, n, pair.second),
    )
    if constants.DEBUG_LIMIT_CHECKS:
        _check_stable(c, g, n, pair, value)
    return value


def limit_minus(c: LocalCocycle, g: Elem, pair: HomoclinicPair) -> HElem:
    """``c^{(g),-}(x, x')``, the plus limit along ``g^-1``."""
    return limit_plus(c, c.group.inverse(g), pair)


def displayed_limit(
    c: LocalCocycle, g: Elem, pair: HomoclinicPair, m: int, sign: int = 1
) -> HElem:
    """
    The finite products ``c^{(g),±,(m)}`` with ``f = c(g, ·)``.

    Plus: ``(∏_{k=0}^{m-1} f(g^k x)^-1) (∏_{k=0}^{m-1} f(g^k x')^-1)^-1``.
    Minus: ``(∏_{k=1}^{m-1} f(g^-k x)) (∏_{k=1}^{m-1} f(g^-k x'))^-1``.
    """
    group, coeff = c.group, c.coeff
    word = group.spell(g)
    ks = range(m) if sign >= 0 else range(1, m)

    def product(x: Configuration) -> HElem:
        factors = []
        for k in ks:
            point = group.power(g, k if sign >= 0 else -k)
            value = evaluate_word(c, word, shifted_reader(group, x.at, point))
            factors.append(coeff.inverse(value) if sign >= 0 else value)
        return coeff.product(factors)

    return coeff.multiply(product(pair.first), coeff.inverse(product(pair.second)))


def _plus_minus_certificate(
    g: Elem, pair: HomoclinicPair, plus: HElem, minus: HElem
) -> ObstructionCertificate:
    return ObstructionCertificate(
        ObstructionKind.PLUS_MINUS,
        directions=(g,),
        configurations=(pair.first, pair.second),
        values=(plus, minus),
    )


def _cross_certificate(
    g: Elem, h: Elem, pair: HomoclinicPair, along_g: HElem, along_h: HElem
) -> ObstructionCertificate:
    return ObstructionCertificate(
        ObstructionKind.CROSS_DIRECTION,
        directions=(g, h),
        configurations=(pair.first, pair.second),
        values=(along_g, along_h),
    )


def plus_minus_test(
    c: LocalCocycle, g: Elem, pairs: Iterable[HomoclinicPair]
) -> ObstructionCertificate | None:
    """First pair with ``c^{(g),+} != c^{(g),-}``; None when all pairs pass."""
    for pair in pairs:
        plus = limit_plus(c, g, pair)
        minus = limit_minus(c, g, pair)
        if plus != minus:
            return _plus_minus_certificate(g, pair, plus, minus)
    return None


def cross_direction_test(
    c: LocalCocycle, g: Elem, h: Elem, pairs: Iterable[HomoclinicPair]
) -> ObstructionCertificate | None:
    """First pair with ``c^{(g),+} != c^{(h),+}``; None when all pairs pass."""
    c.group.require_non_torsion(g)
    c.group.require_non_torsion(h)
    for pair in pairs:
        along_g = limit_plus(c, g, pair)
        along_h = limit_plus(c, h, pair)
        if along_g != along_h:
            return _cross_certificate(g, h, pair, along_g, along_h)
    return None


def _battery_step(
    c: LocalCocycle,
    directions: Sequence[Elem],
    pair: HomoclinicPair,
    found: dict[tuple[Elem, ...], ObstructionCertificate],
) -> None:
    """Run the still-open tests on one pair, each plus limit computed once."""
    crossing = len(directions) == 2 and tuple(directions) not in found
    pending = [a for a in directions if (a,) not in found]
    plus = {a: limit_plus(c, a, pair) for a in (directions if crossing else pending)}
    for a in pending:
        minus = limit_minus(c, a, pair)
        if plus[a] != minus:
            found[(a,)] = _plus_minus_certificate(a, pair, plus[a], minus)
    if crossing:
        g, h = directions
        if plus[g] != plus[h]:
            found[(g, h)] = _cross_certificate(g, h, pair, plus[g], plus[h])


def battery_tests(
    c: LocalCocycle, directions: Sequence[Elem], pairs: Iterable[HomoclinicPair]
) -> list[ObstructionCertificate]:
    """
    ``plus_minus_test`` along each direction and, for two directions,
    ``cross_direction_test``, in a single pass over the pairs.

    Returns the certificates those tests would return, in that order.
    """
    for a in directions:
        c.group.require_non_torsion(a)
    keys = [(a,) for a in directions]
    if len(directions) == 2:
        keys.append(tuple(directions))
    found: dict[tuple[Elem, ...], ObstructionCertificate] = {}
    for pair in pairs:
        if len(found) == len(keys):
            break
        _battery_step(c, directions, pair, found)
    return [found[key] for key in keys if key in found]


def separation_radius(c: LocalCocycle, pair: HomoclinicPair) -> int:
    """``ℓ = r_W + r_D``: windows at points outside ``B(ℓ)`` miss D."""
    group = c.group
    reach = max((group.word_length(d) for d in pair.difference), default=0)
    return c.window_radius() + reach


def path_transport(
    c: LocalCocycle,
    path: Word,
    start: Elem,
    x: Configuration,
    y: Configuration,
) -> bool:
    """
    Compare ``c(s_i, p_{i-1} x)`` with ``c(s_i, p_{i-1} y)`` along the path
    ``p_i = s_i ⋯ s_1 start``.

    Raises:
        SeparationViolatedError: If a path point lies in the separation ball.
    """
    group = c.group
    pair = HomoclinicPair(x, y)
    radius = separation_radius(c, pair) if pair.difference else -1
    point = start
    agree = True
    for letter in (*path, None):
        if group.within(point, radius):
            raise SeparationViolatedError(group.format_element(point), radius)
        if letter is None:
            break
        rule = c.rule(letter)
        p_inverse = group.inverse(point)
        if rule.read(group, x.at, p_inverse) != rule.read(group, y.at, p_inverse):
            agree = False
        point = group.multiply(letter.value, point)
    return agree
