"""Fixed-point obstruction and certificate replay."""

import itertools

from src.cocycles.certificates import ObstructionCertificate, ObstructionKind
from src.cocycles.limits import limit_minus, limit_plus
from src.cocycles.local import LocalCocycle, evaluate, evaluate_word
from src.coeff import HElem
from src.shifts import Configuration, HomoclinicPair


def constant_points(c: LocalCocycle) -> list[Configuration]:
    """The constant configurations of X, one per admissible symbol."""
    shift = c.shift
    return [
        Configuration.build(c.group, shift.alphabet, {}, symbol)
        for symbol in shift.alphabet.symbols
        if shift.constant_allowed(symbol)
    ]


def _same_class(c: LocalCocycle, first: HElem, second: HElem) -> bool:
    coeff = c.coeff
    if coeff.is_abelian or not coeff.is_finite:
        return first == second
    return second in coeff.conjugacy_class(first)


def fixed_point_obstruction(c: LocalCocycle) -> ObstructionCertificate | None:
    """
    Compare ``c(s, x)`` across the constant configurations of X.

    A constant ``x`` is fixed by all of G, so a cohomologous homomorphism would
    give ``c(s, x) = b(x)^-1 φ(s) b(x)`` for every constant ``x``. Different values
    (different conjugacy classes when H is nonabelian) rule that out.
    """
    points = constant_points(c)
    group = c.group
    for letter in group.letters:
        values = [evaluate_word(c, (letter,), x.at) for x in points]
        for (x1, v1), (x2, v2) in itertools.combinations(zip(points, values), 2):
            if not _same_class(c, v1, v2):
                return ObstructionCertificate(
                    ObstructionKind.FIXED_POINT,
                    directions=(letter.value,),
                    configurations=(x1, x2),
                    values=(v1, v2),
                )
    return None


def replay(c: LocalCocycle, certificate: ObstructionCertificate) -> bool:
    """Re-evaluate a certificate; true when the stored inequality is reproduced."""
    kind = certificate.kind
    if kind == ObstructionKind.RELATOR:
        if certificate.relator is None or certificate.pattern is None:
            return False
        value = evaluate_word(c, certificate.relator, certificate.pattern.__getitem__)
        return value != c.coeff.identity and (value,) == certificate.values

    if kind == ObstructionKind.FIXED_POINT:
        (g,) = certificate.directions
        x1, x2 = certificate.configurations
        values = (evaluate(c, g, x1), evaluate(c, g, x2))
        return values == certificate.values and not _same_class(c, *values)

    pair = HomoclinicPair(*certificate.configurations)
    if kind == ObstructionKind.PLUS_MINUS:
        (g,) = certificate.directions
        values = (limit_plus(c, g, pair), limit_minus(c, g, pair))
    else:
        g, h = certificate.directions
        values = (limit_plus(c, g, pair), limit_plus(c, h, pair))
    return values == certificate.values and values[0] != values[1]
