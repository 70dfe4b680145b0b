"""Tests for src/groups/"""

import pytest

from src.exceptions import (
    BallTooLargeError,
    ParameterOutOfRangeError,
    ParseError,
    TorsionElementError,
    UnsupportedFamilyError,
)
from src.groups import (
    FreeAbelianGroup,
    FreeGroup,
    FreeProductCyclicGroup,
    HeisenbergGroup,
    group_spec_of,
    make_group,
)
from src.records import GroupSpec

# --- Free abelian groups ---


def test_free_abelian_arithmetic(z2: FreeAbelianGroup) -> None:
    """Vectors add, invert and measure by the l1 norm."""
    a, b = (2, -1), (-3, 4)

    assert z2.multiply(a, b) == (-1, 3)
    assert z2.inverse(a) == (-2, 1)
    assert z2.word_length(b) == 7
    assert z2.power(a, 3) == (6, -3)


def test_free_abelian_ball_sizes(z2: FreeAbelianGroup) -> None:
    """|B(r)| in Z^2 is 2r^2 + 2r + 1."""
    for r in range(4):
        assert len(z2.ball(r)) == 2 * r * r + 2 * r + 1


def test_ball_order_is_length_then_normal_form(z2: FreeAbelianGroup) -> None:
    """Elements come sorted by word length, ties broken by normal form."""
    ball = z2.ball(1)

    assert ball.elements == ((0, 0), (-1, 0), (0, -1), (0, 1), (1, 0))
    assert ball.sphere(1) == ((-1, 0), (0, -1), (0, 1), (1, 0))
    assert (1, 1) not in ball


def test_ball_negative_radius_is_empty(z2: FreeAbelianGroup) -> None:
    """B(-1) is empty."""
    assert len(z2.ball(-1)) == 0


def test_ball_cap_raises_budget_error() -> None:
    """A ball larger than the element cap is refused."""
    group = FreeAbelianGroup(2, ball_cap=10)

    with pytest.raises(BallTooLargeError) as exc_info:
        group.ball(2)

    assert exc_info.value.cap == 10


def test_free_abelian_parse_and_format(z2: FreeAbelianGroup, z1) -> None:
    """Vectors, words and the identity all parse to normal forms."""
    assert z2.parse_element("(2,1)") == (2, 1)
    assert z2.parse_element("e1 e1 e2^-1") == (2, -1)
    assert z2.parse_element("e") == (0, 0)
    assert z2.format_element((2, 1)) == "(2,1)"
    assert z1.parse_element("-3") == (-3,)


def test_parse_rejects_wrong_rank(z2: FreeAbelianGroup) -> None:
    """A vector of the wrong length is not an element."""
    with pytest.raises(ParseError):
        z2.parse_element("(1,2,3)")


def test_parse_word_exponents(z2: FreeAbelianGroup) -> None:
    """``e1^3`` expands to three letters and ``e2^-2`` to two inverse letters."""
    word = z2.parse_word("e1^3 e2^-2")

    assert [letter.name for letter in word] == ["e1"] * 3 + ["e2^-1"] * 2


def test_spell_is_geodesic(z2: FreeAbelianGroup) -> None:
    """The canonical spelling evaluates back to the element with minimal length."""
    g = (3, -2)
    word = z2.spell(g)

    assert len(word) == z2.word_length(g)
    assert z2.evaluate_word(word) == g


def test_free_abelian_relators_are_commutators(z2: FreeAbelianGroup) -> None:
    """Z^2 has the single relator [e1, e2], which evaluates to the identity."""
    relators = z2.relators()

    assert len(relators) == 1
    assert z2.evaluate_word(relators[0]) == z2.identity


def test_escape_index(z1: FreeAbelianGroup) -> None:
    """The least K with l(a^k) > radius for all k >= K."""
    assert z1.escape_index((1,), 3) == 4
    assert z1.escape_index((2,), 3) == 2


def test_power_length_lower_bound_is_exact_on_closed_forms(
    z2: FreeAbelianGroup, f2: FreeGroup
) -> None:
    """Closed-form families return the exact length of the power."""
    assert z2.power_length_lower_bound((1, 2), 3) == 9
    assert f2.power_length_lower_bound(f2.parse_element("a b a^-1"), 5) == 7

    with pytest.raises(TorsionElementError):
        z2.power_length_lower_bound((0, 0), 2)


def test_identity_is_torsion(z2: FreeAbelianGroup) -> None:
    """The identity has order one and cannot be used as a direction."""
    assert z2.is_torsion((0, 0)).is_torsion
    assert not z2.is_torsion((1, 0)).is_torsion

    with pytest.raises(TorsionElementError) as exc_info:
        z2.require_non_torsion((0, 0))

    assert exc_info.value.order == 1


# --- Free groups ---


def test_free_group_reduction(f2: FreeGroup) -> None:
    """Adjacent inverse letters cancel."""
    a = f2.parse_element("a")
    a_inverse = f2.inverse(a)

    assert f2.multiply(a, a_inverse) == f2.identity
    assert f2.format_element(f2.parse_element("a b b^-1 a")) == "a a"


def test_free_group_ball_sizes(f2: FreeGroup) -> None:
    """|B(r)| in F_2 is 2 * 3^r - 1."""
    for r in range(4):
        assert len(f2.ball(r)) == 2 * 3**r - 1


def test_free_group_has_no_relators(f2: FreeGroup) -> None:
    assert f2.relators() == []


def test_free_group_escape_index_uses_cyclic_core(f2: FreeGroup) -> None:
    """``a b a^-1`` has cyclic core ``b``, so its powers grow by one per step."""
    g = f2.parse_element("a b a^-1")

    assert f2.word_length(f2.power(g, 5)) == 7
    assert f2.escape_index(g, 6) == 7


# --- Free products of cyclic groups ---


def test_free_product_torsion_detection() -> None:
    """Conjugates of factor elements are torsion; mixed cores are not."""
    group = FreeProductCyclicGroup((2, 3))
    s1 = group.parse_element("s1")
    s2 = group.parse_element("s2")

    assert group.is_torsion(s1).order == 2
    assert group.is_torsion(s2).order == 3
    conjugate = group.multiply(group.multiply(s2, s1), group.inverse(s2))
    assert group.is_torsion(conjugate).order == 2
    assert not group.is_torsion(group.multiply(s1, s2)).is_torsion


def test_free_product_relators_hold() -> None:
    """``s_i^{n_i}`` evaluates to the identity."""
    group = FreeProductCyclicGroup((2, 3))

    for relator in group.relators():
        assert group.evaluate_word(relator) == group.identity


def test_free_product_syllable_length() -> None:
    """``s2^2`` in Z/3 costs one letter (it is ``s2^-1``)."""
    group = FreeProductCyclicGroup((2, 3))

    assert group.word_length(((2, 2),)) == 1
    assert len(group.ball(1)) == 4


# --- Heisenberg group ---


def test_heisenberg_commutator_is_central(heisenberg: HeisenbergGroup) -> None:
    """``x y x^-1 y^-1 = z = (0,0,1)`` has word length 4."""
    z = heisenberg.parse_element("x y x^-1 y^-1")

    assert z == (0, 0, 1)
    assert heisenberg.word_length(z) == 4
    x = heisenberg.parse_element("x")
    assert heisenberg.multiply(x, z) == heisenberg.multiply(z, x)


def test_heisenberg_relators_hold(heisenberg: HeisenbergGroup) -> None:
    for relator in heisenberg.relators():
        assert heisenberg.evaluate_word(relator) == heisenberg.identity


def test_heisenberg_inverse(heisenberg: HeisenbergGroup) -> None:
    g = (2, -1, 3)

    assert heisenberg.multiply(g, heisenberg.inverse(g)) == heisenberg.identity
    assert heisenberg.format_element(g) == "(2,-1,3)"


def test_heisenberg_within_uses_lower_bound(heisenberg: HeisenbergGroup) -> None:
    """Far elements are rejected without a breadth-first search."""
    assert not heisenberg.within((10, 10, 0), 5)
    assert heisenberg.within((1, 1, 0), 2)


def test_heisenberg_power_length_lower_bound(heisenberg: HeisenbergGroup) -> None:
    """Horizontal powers grow linearly; central powers obey the area bound."""
    assert heisenberg.power_length_lower_bound((1, 0, 0), 5) == 5
    # z^4 = [x^2, y^2] has length 8 = sqrt(16 * 4)
    assert heisenberg.power_length_lower_bound((0, 0, 1), 4) == 8


# --- Factory ---


@pytest.mark.parametrize(
    ("spec", "expected"),
    [
        (GroupSpec(family="free_abelian", params={"d": 3}), "Z^3"),
        (GroupSpec(family="free", params=2), "F_2"),
        (GroupSpec(family="free_product_cyclic", params=[2, 3]), "Z/2 * Z/3"),
        (GroupSpec(family="heisenberg"), "H3(Z)"),
    ],
)
def test_make_group_families(spec: GroupSpec, expected: str) -> None:
    """Each supported family builds from its spec."""
    assert make_group(spec).describe() == expected


def test_make_group_unknown_family() -> None:
    with pytest.raises(UnsupportedFamilyError) as exc_info:
        make_group(GroupSpec(family="sl2z"))

    assert exc_info.value.family == "sl2z"


@pytest.mark.parametrize(
    "spec",
    [
        GroupSpec(family="free_abelian", params={"d": 9}),
        GroupSpec(family="free", params={"r": 0}),
        GroupSpec(family="free_product_cyclic", params=[2]),
        GroupSpec(family="free_product_cyclic", params=[2, 65]),
    ],
)
def test_make_group_rejects_out_of_range(spec: GroupSpec) -> None:
    with pytest.raises(ParameterOutOfRangeError):
        make_group(spec)


@pytest.mark.parametrize("orders", [[2, "three"], [2, None], [2, True]])
def test_make_group_rejects_non_integer_orders(orders: list) -> None:
    """Factor orders must be integers, not anything ``int`` happens to accept."""
    spec = GroupSpec(family="free_product_cyclic", params={"orders": orders})

    with pytest.raises(ParseError) as exc_info:
        make_group(spec)

    assert exc_info.value.what == "factor order"


def test_group_spec_round_trip() -> None:
    """``group_spec_of`` rebuilds an equivalent group."""
    for group in (FreeAbelianGroup(2), FreeGroup(3), FreeProductCyclicGroup((2, 3))):
        rebuilt = make_group(group_spec_of(group))
        assert rebuilt.describe() == group.describe()
