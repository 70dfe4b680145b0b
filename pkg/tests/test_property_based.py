"""Property-based tests using Hypothesis to discover edge cases.

This module checks algebraic invariants on randomly generated inputs:
- Group laws on Z^d, F_2 and the Heisenberg group (words, spelling, inverses)
- Coefficient group arithmetic for Z/n and S_3
- Shift invariance of golden mean membership
- The cocycle identity and the coboundary formula
- Untwisting random coboundaries recovers their homomorphism
- The plus/minus verdict does not change under a cohomologous twist
- Untwist radii of coboundaries whose transfer reads a single cell
- End counts never grow as the outer radius grows
- Every record type survives a JSON round trip
"""

import random

from hypothesis import HealthCheck, given, settings, strategies as st
from pydantic import BaseModel

from src.cocycles import (
    UntwistSettings,
    UntwistVerdict,
    coboundary_cocycle,
    evaluate,
    example_cocycle_free,
    example_cocycle_z,
    homomorphism_cocycle,
    homomorphism_from_values,
    limit_minus,
    limit_plus,
    random_coboundary_instance,
    random_transfer_rule,
    twist_by_transfer,
    untwist,
    untwist_radius,
)
from src.coeff import cyclic_group, symmetric_group_table, table_group
from src.groups import (
    FreeAbelianGroup,
    FreeGroup,
    FreeProductCyclicGroup,
    HeisenbergGroup,
)
from src.output import (
    bundle_document,
    end_report_record,
    glue_report_record,
    periodic_record,
    transfer_report_record,
    validation_record,
    witness_record,
)
from src.records import CertificateRecord, EvalRecord
from src.shifts import (
    Alphabet,
    Configuration,
    HomoclinicPair,
    full_shift,
    glue_check,
    golden_mean_isolated,
    membership,
    periodize_zd,
    random_configuration,
    witness,
)
from src.topology import complement_components, estimate_ends

# The autouse cache-clearing fixture is function scoped
FIXTURE_SAFE = [HealthCheck.function_scoped_fixture]

GROUPS = [FreeAbelianGroup(2), FreeGroup(2), HeisenbergGroup()]

letter_indices = st.lists(st.integers(min_value=0, max_value=3), max_size=6)


def _word(group, indices: list[int]):
    return tuple(group.letters[i] for i in indices)


# ============================================================================
# Group Laws
# ============================================================================


@given(st.sampled_from(GROUPS), letter_indices, letter_indices, letter_indices)
@settings(max_examples=100, deadline=None, suppress_health_check=FIXTURE_SAFE)
def test_multiplication_is_associative(group, u, v, w) -> None:
    a, b, c = (group.evaluate_word(_word(group, t)) for t in (u, v, w))

    left = group.multiply(group.multiply(a, b), c)
    right = group.multiply(a, group.multiply(b, c))

    assert left == right


@given(st.sampled_from(GROUPS), letter_indices)
@settings(max_examples=100, deadline=None, suppress_health_check=FIXTURE_SAFE)
def test_inverse_cancels(group, u) -> None:
    a = group.evaluate_word(_word(group, u))

    assert group.multiply(a, group.inverse(a)) == group.identity
    assert group.multiply(group.inverse(a), a) == group.identity


@given(st.sampled_from(GROUPS), letter_indices)
@settings(max_examples=100, deadline=None, suppress_health_check=FIXTURE_SAFE)
def test_spelling_is_a_geodesic_for_the_element(group, u) -> None:
    """The canonical spelling evaluates back and is no longer than any word."""
    a = group.evaluate_word(_word(group, u))

    spelled = group.spell(a)

    assert group.evaluate_word(spelled) == a
    assert len(spelled) == group.word_length(a) <= len(u)


@given(st.sampled_from(GROUPS), letter_indices)
@settings(max_examples=50, deadline=None, suppress_health_check=FIXTURE_SAFE)
def test_format_then_parse_is_identity(group, u) -> None:
    a = group.evaluate_word(_word(group, u))

    assert group.parse_element(group.format_element(a)) == a


# ============================================================================
# Coefficient Groups
# ============================================================================

S3 = table_group(*symmetric_group_table(3))


@given(
    st.sampled_from([cyclic_group(2), cyclic_group(5), S3]),
    st.data(),
)
@settings(max_examples=100, deadline=None, suppress_health_check=FIXTURE_SAFE)
def test_coeff_group_laws(coeff, data) -> None:
    elements = coeff.elements()
    a, b, c = (data.draw(st.sampled_from(elements)) for _ in range(3))

    assert coeff.multiply(coeff.multiply(a, b), c) == coeff.multiply(
        a, coeff.multiply(b, c)
    )
    assert coeff.multiply(a, coeff.inverse(a)) == coeff.identity
    assert coeff.multiply(coeff.identity, a) == a
    assert coeff.parse(coeff.format(a)) == a


# ============================================================================
# Subshifts
# ============================================================================


@given(
    st.sets(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), max_size=6),
    st.tuples(st.integers(-10, 10), st.integers(-10, 10)),
)
@settings(max_examples=100, deadline=None, suppress_health_check=FIXTURE_SAFE)
def test_golden_mean_membership_is_shift_invariant(cells, g) -> None:
    z2 = FreeAbelianGroup(2)
    spec = golden_mean_isolated(z2)
    x = Configuration.build(z2, spec.alphabet, dict.fromkeys(cells, "1"))

    assert membership(spec, x) == membership(spec, x.shift(g))


# ============================================================================
# Cocycles
# ============================================================================


@given(letter_indices, letter_indices, st.sets(st.integers(0, 5), max_size=4))
@settings(max_examples=100, deadline=None, suppress_health_check=FIXTURE_SAFE)
def test_cocycle_identity_on_free_group(u, v, support) -> None:
    """``c(g h, x) = c(g, h x) c(h, x)``."""
    c = example_cocycle_free(2)
    f2 = c.group
    ball = f2.ball(2).elements
    x = Configuration.build(
        f2, c.shift.alphabet, {ball[i]: "1" for i in support if i < len(ball)}
    )
    g = f2.evaluate_word(_word(f2, u))
    h = f2.evaluate_word(_word(f2, v))

    expected = c.coeff.multiply(evaluate(c, g, x.shift(h)), evaluate(c, h, x))

    assert evaluate(c, f2.multiply(g, h), x) == expected


@given(st.integers(0, 2**16), letter_indices, st.sets(st.integers(0, 12)))
@settings(max_examples=50, deadline=None, suppress_health_check=FIXTURE_SAFE)
def test_coboundary_formula(seed, u, support) -> None:
    """A generated coboundary equals ``β(g x)^-1 φ(g) β(x)`` on every ``g``."""
    instance = random_coboundary_instance(random.Random(seed))
    c = instance.cocycle
    group, coeff = c.group, c.coeff
    ball = group.ball(2).elements
    x = Configuration.build(group, c.shift.alphabet, {ball[i]: "1" for i in support})
    g = group.evaluate_word(_word(group, u))

    def beta(y: Configuration):
        return instance.beta.read(group, y.at, group.identity)

    expected = coeff.multiply(
        coeff.inverse(beta(x.shift(g))),
        coeff.multiply(instance.phi(g), beta(x)),
    )

    assert evaluate(c, g, x) == expected


@given(st.integers(0, 2**16))
@settings(max_examples=5, deadline=None, suppress_health_check=FIXTURE_SAFE)
def test_untwist_recovers_coboundary_homomorphism(seed: int) -> None:
    instance = random_coboundary_instance(random.Random(seed))
    light = UntwistSettings(
        radius=1,
        exhaustive_radius=1,
        random_pairs=5,
        random_radius=2,
        verify_samples=10,
    )

    report = untwist(instance.cocycle, settings=light, rng=random.Random(seed))

    assert report.verdict == UntwistVerdict.UNTWISTED
    assert report.homomorphism == instance.phi


@given(st.integers(0, 2**16), st.sampled_from(["z", "free"]))
@settings(max_examples=20, deadline=None, suppress_health_check=FIXTURE_SAFE)
def test_plus_minus_verdict_survives_a_twist(seed: int, kind: str) -> None:
    """``β(g^n x)`` and ``β(g^n x')`` agree for large ``|n|``, so the limits
    shift by the same ``β`` values at both ends."""
    rng = random.Random(seed)
    c = example_cocycle_z() if kind == "z" else example_cocycle_free(2)
    group = c.group
    beta = random_transfer_rule(group, c.shift, c.coeff, 1, rng)
    twisted = twist_by_transfer(c, beta)
    zero = Configuration.build(group, c.shift.alphabet, {})
    elements = group.ball(2).elements
    g = group.letters[0].value

    for _ in range(5):
        pair = HomoclinicPair(
            random_configuration(c.shift, zero, elements, rng),
            random_configuration(c.shift, zero, elements, rng),
        )
        passes = limit_plus(c, g, pair) == limit_minus(c, g, pair)
        assert passes == (limit_plus(twisted, g, pair) == limit_minus(twisted, g, pair))


def test_untwist_radius_of_a_homomorphism_is_zero() -> None:
    """A cocycle that reads nothing needs no agreement ball."""
    group = FreeAbelianGroup(1)
    coeff = cyclic_group(2)
    phi = homomorphism_from_values(group, coeff, {"e1": 1})
    c = homomorphism_cocycle(full_shift(group, Alphabet.of(["0", "1"])), phi)

    assert untwist_radius(c, (1,)) == 0


@given(st.integers(0, 2**16))
@settings(max_examples=20, deadline=None, suppress_health_check=FIXTURE_SAFE)
def test_untwist_radius_of_single_cell_coboundaries(seed: int) -> None:
    """``β`` reads ``x_e``, so each letter reads ``{e, s^-1}`` and ``r_0 = 1``."""
    rng = random.Random(seed)
    coeff = cyclic_group(2)
    for group, g, expected in (
        (FreeAbelianGroup(1), (1,), 4),
        (FreeAbelianGroup(2), (1, 1), 3),
    ):
        shift = full_shift(group, Alphabet.of(["0", "1"]))
        values = {
            letter.name: rng.choice(coeff.elements())
            for letter in group.letters
            if letter.index < letter.inverse_index
        }
        phi = homomorphism_from_values(group, coeff, values)
        beta = random_transfer_rule(group, shift, coeff, 0, rng)
        c = coboundary_cocycle(shift, beta, phi)

        assert c.window_radius() == 1
        assert untwist_radius(c, g) == expected


# ============================================================================
# Cayley Topology
# ============================================================================

ALL_GROUPS = [
    FreeAbelianGroup(1),
    FreeAbelianGroup(2),
    FreeGroup(2),
    FreeProductCyclicGroup((2, 3)),
    HeisenbergGroup(),
]


@given(
    st.sampled_from(ALL_GROUPS),
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=1, max_value=3),
)
@settings(max_examples=40, deadline=None, suppress_health_check=FIXTURE_SAFE)
def test_end_counts_do_not_grow_with_the_outer_radius(group, inner, extra) -> None:
    """A geodesic to ``S(R + 1)`` crosses ``S(R)`` inside the same component."""

    def ends(outer: int) -> int:
        components = complement_components(group, inner, outer)
        return sum(1 for component in components if component.touches_sphere)

    outer = inner + extra
    assert ends(outer + 1) <= ends(outer)


# ============================================================================
# Records
# ============================================================================


def _survives_json(record: BaseModel) -> bool:
    return type(record).model_validate_json(record.model_dump_json()) == record


@given(st.integers(0, 2**16))
@settings(max_examples=5, deadline=None, suppress_health_check=FIXTURE_SAFE)
def test_untwist_records_survive_json(seed: int) -> None:
    instance = random_coboundary_instance(random.Random(seed))
    light = UntwistSettings(
        radius=1,
        exhaustive_radius=1,
        random_pairs=5,
        random_radius=2,
        verify_samples=10,
    )
    report = untwist(instance.cocycle, settings=light, rng=random.Random(seed))

    assert _survives_json(transfer_report_record(instance.cocycle, report, seed))
    assert _survives_json(bundle_document(instance.cocycle))
    assert _survives_json(validation_record(instance.cocycle))


def test_every_other_record_survives_json() -> None:
    z1, z2 = FreeAbelianGroup(1), FreeAbelianGroup(2)
    line = golden_mean_isolated(z1)
    plane = golden_mean_isolated(z2)
    z = Configuration.build(z1, line.alphabet, {(0,): "1"})
    p = {(0, 0): "1"}
    records: list[BaseModel] = [
        end_report_record(z2, estimate_ends(z2)),
        witness_record(witness(line, (1,), 1, z.shift((20,)), z.shift((-20,)))),
        periodic_record(line, periodize_zd(line, z, z1.ball(1).elements, 5)),
        glue_report_record(z2, glue_check(plane, p, p, (3, 3), 1), (3, 3)),
        glue_report_record(z2, glue_check(plane, p, p, (1, 1), 1), (1, 1)),
        bundle_document(example_cocycle_free(2)),
        EvalRecord(g="(1)", value="1"),
        CertificateRecord(
            kind="RelatorViolation",
            relator=["e1", "e2", "e1^-1", "e2^-1"],
            pattern={"(0,0)": "1"},
            values=["1"],
        ),
    ]

    for record in records:
        assert _survives_json(record)
