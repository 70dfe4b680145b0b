"""Integration tests for untwist CLI commands and end-to-end scenarios.

The CLI tests run full commands against documents on disk. The scenarios
marked ``slow`` replay the acceptance batteries: coboundary round trips, the
counterexamples, specification certificates, end verdicts and periodization.
"""

import json
import random
from pathlib import Path

import pytest
from click.testing import CliRunner

from src.cocycles import (
    ObstructionKind,
    UntwistSettings,
    UntwistVerdict,
    choose_directions,
    example_cocycle_free,
    example_cocycle_z,
    random_coboundary_instance,
    untwist,
)
from src.constants import EXIT_OBSTRUCTION, EXIT_OK
from src.groups import (
    FreeAbelianGroup,
    FreeGroup,
    FreeProductCyclicGroup,
    GroupContext,
    HeisenbergGroup,
)
from src.main import cli
from src.shifts import (
    Alphabet,
    Configuration,
    cone_elements,
    full_shift,
    golden_mean_agreement_radius,
    golden_mean_isolated,
    membership,
    periodic_membership,
    periodize_zd,
    random_configuration,
    specification_n,
    witness,
)
from tests.conftest import write_json

GROUP_DOCUMENTS = {
    "z": {"family": "free_abelian", "params": {"d": 1}},
    "z2": {"family": "free_abelian", "params": {"d": 2}},
    "heisenberg": {"family": "heisenberg"},
    "f2": {"family": "free", "params": {"r": 2}},
    "modular": {"family": "free_product_cyclic", "params": [2, 3]},
}

ACCEPTANCE_SETTINGS = UntwistSettings(
    radius=1,
    exhaustive_radius=1,
    random_pairs=20,
    random_radius=2,
    verify_samples=30,
)

ROUND_TRIP_SETTINGS = UntwistSettings(
    radius=2,
    exhaustive_radius=1,
    random_pairs=100,
    random_radius=2,
    verify_samples=100,
)

ALL_FAMILIES = pytest.mark.parametrize(
    "group",
    [
        FreeAbelianGroup(1),
        FreeAbelianGroup(2),
        FreeGroup(2),
        FreeProductCyclicGroup((2, 3)),
        HeisenbergGroup(),
    ],
    ids=["z", "z2", "f2", "modular", "heisenberg"],
)

# Witness laws are checked on the cones out to this radius
WITNESS_CHECK_RADIUS = 12


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def _invoke_json(runner: CliRunner, args: list[str]) -> tuple[int, dict]:
    result = runner.invoke(cli, args)
    return result.exit_code, json.loads(result.stdout) if result.stdout else {}


# --- CLI flows ---


@pytest.mark.parametrize(
    ("kind", "code", "verdict"),
    [
        ("z", EXIT_OBSTRUCTION, "ObstructionFound"),
        ("free", EXIT_OBSTRUCTION, "ObstructionFound"),
        ("coboundary", EXIT_OK, "Untwisted"),
    ],
)
def test_integration_example_then_untwist(
    runner: CliRunner,
    mock_main_console,
    light_config: Path,
    kind: str,
    code: int,
    verdict: str,
) -> None:
    """``example`` writes a bundle that ``untwist`` consumes unchanged."""
    bundle = light_config / f"example-{kind}.json"
    runner.invoke(cli, ["example", "--kind", kind, "--seed", "3", "--out", str(bundle)])

    exit_code, report = _invoke_json(
        runner, ["untwist", "--cocycle", str(bundle), "--seed", "3"]
    )

    assert exit_code == code
    assert report["verdict"] == verdict
    assert report["seed"] == 3


def test_integration_untwist_report_is_reproducible(
    runner: CliRunner, mock_main_console, light_config: Path
) -> None:
    """Two runs with the same seed write byte-identical reports."""
    bundle = light_config / "coboundary.json"
    runner.invoke(cli, ["example", "--kind", "coboundary", "--out", str(bundle)])

    outputs = [
        runner.invoke(cli, ["untwist", "--cocycle", str(bundle), "--seed", "9"]).stdout
        for _ in range(2)
    ]

    assert outputs[0] == outputs[1]
    assert json.loads(outputs[0])["mode"] == "table"


def test_integration_validate_then_eval(
    runner: CliRunner, mock_main_console, light_config: Path
) -> None:
    """The F_2 counterexample validates trivially and evaluates along words."""
    bundle = light_config / "free.json"
    x = write_json(light_config / "x.json", {"overlay": [["a", "1"]]})
    runner.invoke(cli, ["example", "--kind", "free", "--out", str(bundle)])

    _, validation = _invoke_json(runner, ["validate", "--cocycle", str(bundle)])
    exit_code, value = _invoke_json(
        runner, ["eval", "--cocycle", str(bundle), "--g", "a", "--x", str(x)]
    )

    assert validation["level"] == "trivial"
    assert exit_code == EXIT_OK
    assert value["g"] == "a"


def test_integration_witness_glue_and_periodize_on_golden_mean(
    runner: CliRunner, mock_main_console, light_config: Path
) -> None:
    """Specification evidence for the golden mean shift on Z^2."""
    group = write_json(light_config / "z2.json", GROUP_DOCUMENTS["z2"])
    shift = write_json(light_config / "gm.json", {"kind": "golden_mean"})
    x = write_json(light_config / "x.json", {"overlay": [["(20,0)", "1"]]})
    x_prime = write_json(light_config / "xp.json", {"overlay": [["(-20,0)", "1"]]})
    p = write_json(light_config / "p.json", {"overlay": [["(0,0)", "1"]]})
    space = ["--group", str(group), "--shift", str(shift)]

    witness_args = ["--a", "(1,0)", "--r", "1"]
    witness_args += ["--x", str(x), "--x-prime", str(x_prime)]
    _, witnessed = _invoke_json(runner, ["witness", *space, *witness_args])
    _, glued = _invoke_json(
        runner,
        ["glue", *space, "--p1", str(p), "--p2", str(p), "--g", "(5,0)", "--r", "1"],
    )
    _, periodic = _invoke_json(
        runner, ["periodize", *space, "--z", str(p), "--period", "8"]
    )

    assert witnessed["agreement_radius"] == 13
    assert witnessed["configuration"]["overlay"] == [["(-20,0)", "1"], ["(20,0)", "1"]]
    assert glued["ok"]
    assert periodic["in_subshift"]
    assert periodic["cells"] == [["(0,0)", "1"]]


# --- Acceptance scenarios ---


@pytest.mark.slow
def test_acceptance_coboundary_round_trip() -> None:
    """50 seeded coboundaries on Z^2 at R = 2: ``φ`` is recovered and
    ``T β^-1`` is constant over every pattern on B(2)."""
    for seed in range(50):
        instance = random_coboundary_instance(random.Random(seed))
        c = instance.cocycle
        group, coeff = c.group, c.coeff

        report = untwist(c, settings=ROUND_TRIP_SETTINGS, rng=random.Random(seed))

        assert report.verdict == UntwistVerdict.UNTWISTED, seed
        assert report.homomorphism == instance.phi, seed
        transfer = report.transfer
        assert transfer is not None
        assert len(transfer.table) == 2**13
        offsets = set()
        for key, limit in transfer.table.items():
            # T(x) = b(x)^-1
            read = dict(zip(transfer.cells, key)).__getitem__
            beta = instance.beta.read(group, read, group.identity)
            offsets.add(coeff.divide_left(limit, coeff.inverse(beta)))
        assert len(offsets) == 1, seed


@pytest.mark.slow
@pytest.mark.parametrize("cocycle_factory", [example_cocycle_z, example_cocycle_free])
def test_acceptance_counterexamples(cocycle_factory) -> None:
    """Both counterexamples carry a plus/minus and a fixed point certificate."""
    c = cocycle_factory()

    report = untwist(c, settings=ACCEPTANCE_SETTINGS, rng=random.Random(0))

    assert report.verdict == UntwistVerdict.OBSTRUCTION
    by_kind = {cert.kind: cert for cert in report.certificates}
    assert sorted(by_kind[ObstructionKind.PLUS_MINUS].values) == [0, 1]
    assert set(by_kind[ObstructionKind.FIXED_POINT].values) == {0, 1}


def _non_torsion_directions(group: GroupContext, radius: int) -> list:
    return [
        a
        for a in group.ball(radius).elements
        if a != group.identity and not group.is_torsion(a).is_torsion
    ]


@pytest.mark.slow
@ALL_FAMILIES
def test_acceptance_cones_meet_inside_agreement_ball(group: GroupContext) -> None:
    """``P^+(a, r) ∩ P^-(a, r) ∩ B(N + 4) ⊆ B(N)`` for a in B(2), r <= 2."""
    for a in _non_torsion_directions(group, 2):
        for r in (0, 1, 2):
            n = specification_n(group, a, r)
            forward = cone_elements(group, a, r, +1, n + 4)
            backward = cone_elements(group, a, r, -1, n + 4)

            assert all(group.within(g, n) for g in forward & backward), (a, r)


@pytest.mark.slow
@ALL_FAMILIES
def test_acceptance_full_shift_witness_laws(group: GroupContext) -> None:
    """200 witnesses per family copy x on the forward cone and x' on the
    backward cone, out to radius 12."""
    spec = full_shift(group, Alphabet.of(["0", "1"]))
    zero = Configuration.build(group, spec.alphabet)
    rng = random.Random(1)
    a = choose_directions(group)[0]
    r = 1
    n = specification_n(group, a, r)
    forward = cone_elements(group, a, r, +1, WITNESS_CHECK_RADIUS)
    backward = cone_elements(group, a, r, -1, WITNESS_CHECK_RADIUS)
    support = sorted(
        set(group.ball(n + 2).elements) | forward | backward, key=group.sort_key
    )
    outside = [g for g in support if not group.within(g, n)]

    for _ in range(200):
        x = random_configuration(spec, zero, support, rng)
        x_prime = x.with_overlay(
            {**x.overlay, **{g: rng.choice("01") for g in outside}}
        )

        y = witness(spec, a, r, x, x_prime).configuration

        assert all(y.at(g) == x.at(g) for g in forward)
        assert all(y.at(g) == x_prime.at(g) for g in backward)


@pytest.mark.slow
@ALL_FAMILIES
def test_acceptance_golden_mean_witnesses_stay_in_x(group: GroupContext) -> None:
    """Copies of one admissible patch far along ``a`` and ``a^-1`` glue into X."""
    spec = golden_mean_isolated(group)
    zero = Configuration.build(group, spec.alphabet)
    rng = random.Random(2)
    a = choose_directions(group)[0]
    n = golden_mean_agreement_radius(spec, a, 1)
    far = group.power(a, n + 4)
    forward = cone_elements(group, a, 1, +1, n + 8)
    backward = cone_elements(group, a, 1, -1, n + 8)
    cells = group.ball(3).elements

    for _ in range(20):
        z = random_configuration(spec, zero, cells, rng)
        x, x_prime = z.shift(far), z.shift(group.inverse(far))

        y = witness(spec, a, 1, x, x_prime).configuration

        assert membership(spec, y)
        assert all(y.at(g) == x.at(g) for g in forward)
        assert all(y.at(g) == x_prime.at(g) for g in backward)


@pytest.mark.slow
@pytest.mark.parametrize(
    ("name", "verdict"),
    [
        ("z", "TwoEnds"),
        ("z2", "OneEnd"),
        ("heisenberg", "OneEnd"),
        ("f2", "InfinitelyMany"),
        ("modular", "InfinitelyMany"),
    ],
)
def test_acceptance_end_verdicts(
    runner: CliRunner, mock_main_console, light_config: Path, name: str, verdict: str
) -> None:
    """The default schedule separates the classic end counts."""
    group = write_json(light_config / f"{name}.json", GROUP_DOCUMENTS[name])

    exit_code, report = _invoke_json(runner, ["ends", "--group", str(group)])

    assert exit_code == EXIT_OK
    assert report["verdict"] == verdict


@pytest.mark.slow
def test_acceptance_periodization() -> None:
    """50 golden mean seeds with K = 8: periodic, admissible, agreeing on B(1)."""
    z2 = FreeAbelianGroup(2)
    spec = golden_mean_isolated(z2)
    zero = Configuration.build(z2, spec.alphabet)
    omega = z2.ball(1).elements
    cells = z2.ball(4).elements
    rng = random.Random(3)

    for _ in range(50):
        z = random_configuration(spec, zero, z2.ball(2).elements, rng)

        y = periodize_zd(spec, z, omega, 8)

        assert periodic_membership(spec, y)
        assert all(y.at(g) == z.at(g) for g in omega)
        for g in cells:
            assert y.at(g) == y.at((g[0] + 8, g[1])) == y.at((g[0], g[1] + 8))
