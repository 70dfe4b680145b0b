"""Locally constant cocycles ``c: G x X -> H`` given by per-letter rule tables.

A word ``t_1 ... t_n`` is read as the product ``t_1 ⋯ t_n`` and evaluated with
the cocycle identity from the right:

    c(t_1 ⋯ t_n, x) = c(t_1, t_2 ⋯ t_n x) ⋯ c(t_n, x)

``c(t, p x)`` reads ``x`` at ``p^-1 w`` for ``w`` in the window of ``t``.
"""

import itertools
import random
from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass, field

from src.cocycles.certificates import (
    ObstructionCertificate,
    ObstructionKind,
    ValidityCertificate,
    ValidityLevel,
)
from src.cocycles.homomorphism import Homomorphism
from src.cache import MemoStore
from src.coeff import CoeffGroup, HElem
from src.constants import DEFAULT_RELATOR_CAP, DEFAULT_RELATOR_SAMPLES
from src.exceptions import (
    CapExceededError,
    InverseInconsistencyError,
    ParseError,
    RelatorViolationError,
)
from src.groups import Elem, GroupContext, Letter, Word
from src.shifts import Pattern, SubshiftSpec, locally_admissible

Reader = Callable[[Elem], str]


@dataclass(frozen=True)
class LetterRule:
    """``c(s, x) = table[x_{w_1}, ..., x_{w_n}]`` for the ordered window ``w``."""

    window: tuple[Elem, ...]
    table: Mapping[tuple[str, ...], HElem] = field(compare=False)

    @classmethod
    def constant(cls, value: HElem) -> "LetterRule":
        return cls((), {(): value})

    def read(self, group: GroupContext, read: Reader, p_inverse: Elem) -> HElem:
        """``c(s, p x)`` where ``p_inverse = p^-1``."""
        key = tuple(read(group.multiply(p_inverse, w)) for w in self.window)
        return self.table[key]


@dataclass(frozen=True)
class LocalCocycle:
    """A validated locally constant cocycle; ``rules[i]`` belongs to ``letters[i]``."""

    group: GroupContext = field(repr=False)
    shift: SubshiftSpec = field(repr=False)
    coeff: CoeffGroup
    rules: tuple[LetterRule, ...] = field(repr=False)
    certificate: ValidityCertificate
    window: frozenset[Elem] = field(init=False)
    memo: MemoStore = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        window = {self.group.identity}
        for rule in self.rules:
            window.update(rule.window)
        object.__setattr__(self, "window", frozenset(window))
        # Direction profiles and background products, see cocycles.limits
        object.__setattr__(self, "memo", MemoStore())

    def rule(self, letter: Letter) -> LetterRule:
        return self.rules[letter.index]

    def window_radius(self) -> int:
        """Least r_0 with ``W ⊆ B(r_0)``."""
        return max(self.group.word_length(w) for w in self.window)


def evaluate_word(c: LocalCocycle, word: Word, read: Reader) -> HElem:
    """``c(t_1 ⋯ t_n, x)`` for the configuration read by ``read``."""
    group, coeff = c.group, c.coeff
    value = coeff.identity
    prefix = group.identity
    for letter in reversed(word):
        step = c.rule(letter).read(group, read, group.inverse(prefix))
        value = coeff.multiply(step, value)
        prefix = group.multiply(letter.value, prefix)
    return value


def evaluate(c: LocalCocycle, g: Elem, x) -> HElem:
    """``c(g, x)`` along the canonical geodesic spelling of ``g``."""
    return evaluate_word(c, c.group.spell(g), x.at)


def shifted_reader(group: GroupContext, read: Reader, p: Elem) -> Reader:
    """Reader of ``p x`` given the reader of ``x``."""
    p_inverse = group.inverse(p)
    return lambda w: read(group.multiply(p_inverse, w))


def power_word(group: GroupContext, g: Elem, n: int) -> Word:
    """A spelling of ``g^n`` (the spelling of ``g`` or ``g^-1`` repeated)."""
    if n < 0:
        return group.spell(group.inverse(g)) * -n
    return group.spell(g) * n


def dependency_window(c: LocalCocycle, word: Word) -> set[Elem]:
    """``dep(w) = ∪ p^-1 W_{t_i}`` over the suffixes ``p = t_{i+1} ⋯ t_n``."""
    group = c.group
    window: set[Elem] = set()
    prefix = group.identity
    for letter in reversed(word):
        p_inverse = group.inverse(prefix)
        window.update(group.multiply(p_inverse, w) for w in c.rule(letter).window)
        prefix = group.multiply(letter.value, prefix)
    return window


@dataclass(frozen=True)
class CheckBudget:
    """Pattern budget for the relator and inverse-consistency checks.

    Up to ``cap`` patterns are checked exhaustively; beyond that ``samples``
    random patterns are drawn, or ``CapExceededError`` is raised when ``strict``.
    """

    cap: int = DEFAULT_RELATOR_CAP
    samples: int = DEFAULT_RELATOR_SAMPLES
    strict: bool = False


def _patterns(
    shift: SubshiftSpec,
    elements: list[Elem],
    budget: CheckBudget,
    rng: random.Random,
    what: str,
) -> tuple[Iterator[Pattern], bool]:
    """Exhaustive patterns when there are at most ``cap``, otherwise random ones."""
    symbols = shift.alphabet.symbols
    needed = len(symbols) ** len(elements)
    if needed <= budget.cap:
        exhaustive = (
            dict(zip(elements, row))
            for row in itertools.product(symbols, repeat=len(elements))
        )
        return exhaustive, True
    if budget.strict:
        raise CapExceededError(what, needed, budget.cap)
    sampled = (
        {g: rng.choice(symbols) for g in elements} for _ in range(budget.samples)
    )
    return sampled, False


def _format_pattern(group: GroupContext, pattern: Pattern) -> dict[str, str]:
    return {group.format_element(g): s for g, s in pattern.items()}


def check_relators(
    c: LocalCocycle,
    *,
    budget: CheckBudget | None = None,
    rng: random.Random | None = None,
) -> tuple[ObstructionCertificate | None, ValidityCertificate]:
    """
    Check ``c(w, x) = e`` for every relator ``w`` on its dependency window.

    Patterns violating a constraint window that lies inside the dependency
    window are not points of X and are skipped.

    Returns:
        A relator certificate for the first violation (or None) and the level
        at which validity was established.
    """
    group, coeff = c.group, c.coeff
    budget = budget or CheckBudget()
    rng = rng or random.Random(0)
    relators = group.relators()
    if not relators:
        return None, ValidityCertificate(ValidityLevel.TRIVIAL)
    level = ValidityLevel.EXHAUSTIVE
    checked = 0
    for relator in relators:
        elements = sorted(dependency_window(c, relator), key=group.sort_key)
        patterns, exhaustive = _patterns(
            c.shift, elements, budget, rng, "relator check"
        )
        if not exhaustive:
            level = ValidityLevel.SAMPLED
        for pattern in patterns:
            if not locally_admissible(c.shift, pattern):
                continue
            checked += 1
            value = evaluate_word(c, relator, pattern.__getitem__)
            if value != coeff.identity:
                certificate = ObstructionCertificate(
                    ObstructionKind.RELATOR,
                    values=(value,),
                    relator=relator,
                    pattern=pattern,
                )
                return certificate, ValidityCertificate(level, len(relators), checked)
    return None, ValidityCertificate(level, len(relators), checked)


def _total(rule: LetterRule, shift: SubshiftSpec, name: str) -> None:
    symbols = shift.alphabet.symbols
    for row in itertools.product(symbols, repeat=len(rule.window)):
        if row not in rule.table:
            raise ParseError(f"rule table for {name}", ",".join(row))


def _synthesized_inverse(
    group: GroupContext, coeff: CoeffGroup, letter: Letter, rule: LetterRule
) -> LetterRule:
    """``c(s^-1, x) = c(s, s^-1 x)^-1`` reads ``x`` on ``s W_s``."""
    window = tuple(group.multiply(letter.value, w) for w in rule.window)
    table = {key: coeff.inverse(value) for key, value in rule.table.items()}
    return LetterRule(window, table)


def _check_inverse_pair(
    shift: SubshiftSpec,
    coeff: CoeffGroup,
    letter: Letter,
    rules: tuple[LetterRule, LetterRule],
    budget: CheckBudget,
    rng: random.Random,
) -> None:
    """``rules`` belong to ``letter`` and its inverse, in that order."""
    group = shift.group
    rule, inverse_rule = rules
    inverse = group.inverse_letter(letter)
    union = set(inverse_rule.window)
    union.update(group.multiply(letter.value, w) for w in rule.window)
    elements = sorted(union, key=group.sort_key)
    patterns, _ = _patterns(shift, elements, budget, rng, "inverse check")
    for pattern in patterns:
        if not locally_admissible(shift, pattern):
            continue
        read = pattern.__getitem__
        direct = inverse_rule.read(group, read, group.identity)
        # c(s, s^-1 x) reads x at s w
        linked = coeff.inverse(rule.read(group, read, letter.value))
        if direct != linked:
            raise InverseInconsistencyError(
                letter.name, inverse.name, _format_pattern(group, pattern)
            )


def _resolve_rules(
    shift: SubshiftSpec,
    coeff: CoeffGroup,
    rules: Mapping[str, LetterRule],
    budget: CheckBudget,
    rng: random.Random,
) -> tuple[LetterRule, ...]:
    """One rule per letter, synthesizing or cross-checking inverse rules."""
    group = shift.group
    resolved: list[LetterRule | None] = [None] * len(group.letters)
    for letter in group.letters:
        rule = rules.get(letter.name)
        if rule is not None:
            _total(rule, shift, letter.name)
            resolved[letter.index] = rule
    for letter in group.letters:
        inverse = group.inverse_letter(letter)
        own, other = resolved[letter.index], resolved[inverse.index]
        if own is None and other is None:
            raise ParseError("cocycle rules", f"no rule for {letter.name}")
        if own is None:
            resolved[letter.index] = _synthesized_inverse(group, coeff, inverse, other)
        elif other is not None and letter.index < inverse.index:
            _check_inverse_pair(shift, coeff, letter, (own, other), budget, rng)
    return tuple(resolved)  # type: ignore[arg-type]


def make_local_cocycle(
    group: GroupContext,
    shift: SubshiftSpec,
    coeff: CoeffGroup,
    rules: Mapping[str, LetterRule],
    *,
    budget: CheckBudget | None = None,
    rng: random.Random | None = None,
) -> LocalCocycle:
    """
    Validate rule tables and build the cocycle.

    Rules may be given for one letter of each inverse pair (the other is
    synthesized) or for both (then they are checked for consistency).

    Raises:
        ParseError: If a letter is unknown, a pair has no rule or a table is not total.
        InverseInconsistencyError: If rules for ``s`` and ``s^-1`` disagree.
        RelatorViolationError: If a relator does not evaluate to the identity.
        CapExceededError: In strict mode, if an exhaustive check is too large.
    """
    budget = budget or CheckBudget()
    rng = rng or random.Random(0)
    for name in rules:
        group.letter(name)

    unchecked = LocalCocycle(
        group,
        shift,
        coeff,
        _resolve_rules(shift, coeff, rules, budget, rng),
        ValidityCertificate(ValidityLevel.UNCHECKED),
    )
    violation, certificate = check_relators(unchecked, budget=budget, rng=rng)
    if violation is not None:
        raise RelatorViolationError(
            " ".join(group.format_word(violation.relator or ())),
            _format_pattern(group, violation.pattern or {}),
            coeff.format(violation.values[0]),
        )
    return LocalCocycle(group, shift, coeff, unchecked.rules, certificate)


def homomorphism_cocycle(shift: SubshiftSpec, phi: Homomorphism) -> LocalCocycle:
    """``c(g, x) = φ(g)``."""
    rules = tuple(LetterRule.constant(value) for value in phi.values)
    return LocalCocycle(
        phi.group,
        shift,
        phi.coeff,
        rules,
        ValidityCertificate(ValidityLevel.BY_CONSTRUCTION),
    )


def _enumerate_rule(
    group: GroupContext,
    shift: SubshiftSpec,
    window: Iterable[Elem],
    value: Callable[[Reader], HElem],
    cap: int,
) -> LetterRule:
    elements = tuple(sorted(set(window), key=group.sort_key))
    symbols = shift.alphabet.symbols
    needed = len(symbols) ** len(elements)
    if needed > cap:
        raise CapExceededError("rule table", needed, cap)
    table = {}
    for row in itertools.product(symbols, repeat=len(elements)):
        pattern = dict(zip(elements, row))
        table[row] = value(pattern.__getitem__)
    return LetterRule(elements, table)


def twist_by_transfer(
    c: LocalCocycle, beta: LetterRule, *, cap: int = DEFAULT_RELATOR_CAP
) -> LocalCocycle:
    """
    The cohomologous cocycle ``c~(s, x) = β(s x)^-1 c(s, x) β(x)``.

    ``β(s x)`` reads ``x`` on ``s^-1 W_β``, so the new window of ``s`` is
    ``W_s ∪ W_β ∪ s^-1 W_β``.
    """
    group, coeff = c.group, c.coeff
    rules = []
    for letter in group.letters:
        rule = c.rule(letter)
        s_inverse = group.inverse(letter.value)
        window = set(rule.window) | set(beta.window)
        window.update(group.multiply(s_inverse, w) for w in beta.window)

        def value(read: Reader, rule=rule, s_inverse=s_inverse) -> HElem:
            after = beta.read(group, read, s_inverse)
            middle = rule.read(group, read, group.identity)
            before = beta.read(group, read, group.identity)
            return coeff.multiply(coeff.divide_left(after, middle), before)

        rules.append(_enumerate_rule(group, c.shift, window, value, cap))
    return LocalCocycle(group, c.shift, coeff, tuple(rules), c.certificate)


def coboundary_cocycle(
    shift: SubshiftSpec,
    b_rule: LetterRule,
    phi: Homomorphism,
    *,
    cap: int = DEFAULT_RELATOR_CAP,
) -> LocalCocycle:
    """
    ``c(s, x) = b(s x)^-1 φ(s) b(x)``; valid by construction since ``φ`` is.
    """
    return twist_by_transfer(homomorphism_cocycle(shift, phi), b_rule, cap=cap)
