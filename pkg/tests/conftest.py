"""Shared fixtures for untwist tests."""

import json
import random
from pathlib import Path
from typing import Any, Protocol

import pytest
from pytest_mock import MockerFixture

from src.cache import clear_group_caches
from src.cocycles import (
    LocalCocycle,
    UntwistSettings,
    example_cocycle_free,
    example_cocycle_z,
    random_coboundary_instance,
)
from src.coeff import CoeffGroup, cyclic_group
from src.groups import FreeAbelianGroup, FreeGroup, HeisenbergGroup
from src.output import bundle_document
from src.shifts import (
    Alphabet,
    Configuration,
    SubshiftSpec,
    full_shift,
    golden_mean_isolated,
)


class MockConsoleProtocol(Protocol):
    """Protocol for mocked Rich console."""

    def print(self, *args: Any, **kwargs: Any) -> None:
        """Print method for console output."""
        ...


@pytest.fixture(autouse=True)
def clear_group_caches_before_each_test() -> None:
    """Drop memoized balls and BFS tables so tests stay independent."""
    clear_group_caches()


# --- Groups and shifts ---


@pytest.fixture
def z1() -> FreeAbelianGroup:
    return FreeAbelianGroup(1)


@pytest.fixture
def z2() -> FreeAbelianGroup:
    return FreeAbelianGroup(2)


@pytest.fixture
def f2() -> FreeGroup:
    return FreeGroup(2)


@pytest.fixture
def heisenberg() -> HeisenbergGroup:
    return HeisenbergGroup()


@pytest.fixture
def binary() -> Alphabet:
    return Alphabet.of(["0", "1"])


@pytest.fixture
def z2_full(z2: FreeAbelianGroup, binary: Alphabet) -> SubshiftSpec:
    """The full 2-shift over Z^2."""
    return full_shift(z2, binary)


@pytest.fixture
def z2_golden(z2: FreeAbelianGroup) -> SubshiftSpec:
    """Golden mean shift over Z^2: no two adjacent 1s along e1 or e2."""
    return golden_mean_isolated(z2)


@pytest.fixture
def z2_zero(z2_full: SubshiftSpec) -> Configuration:
    """The all-zero configuration on Z^2."""
    return Configuration.build(z2_full.group, z2_full.alphabet)


@pytest.fixture
def z_two() -> CoeffGroup:
    """The coefficient group Z/2."""
    return cyclic_group(2)


# --- Cocycles ---


@pytest.fixture
def cocycle_z() -> LocalCocycle:
    """``c(1, x) = x_1`` on the full 2-shift over Z."""
    return example_cocycle_z()


@pytest.fixture
def cocycle_f2() -> LocalCocycle:
    """``c(a, x) = x_a``, ``c(b, x) = x_b`` over F_2."""
    return example_cocycle_free(2)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(7)


@pytest.fixture
def light_settings() -> UntwistSettings:
    """A battery small enough for unit tests."""
    return UntwistSettings(
        radius=1,
        exhaustive_radius=1,
        random_pairs=10,
        random_radius=2,
        verify_samples=20,
    )


# --- Documents on disk ---


def write_json(path: Path, data: Any) -> Path:
    path.write_text(json.dumps(data))
    return path


@pytest.fixture
def z_group_file(tmp_path: Path) -> Path:
    return write_json(
        tmp_path / "z.json", {"family": "free_abelian", "params": {"d": 1}}
    )


@pytest.fixture
def z2_group_file(tmp_path: Path) -> Path:
    return write_json(
        tmp_path / "z2.json", {"family": "free_abelian", "params": {"d": 2}}
    )


@pytest.fixture
def f2_group_file(tmp_path: Path) -> Path:
    return write_json(tmp_path / "f2.json", {"family": "free", "params": {"r": 2}})


@pytest.fixture
def golden_shift_file(tmp_path: Path) -> Path:
    return write_json(tmp_path / "gm.json", {"kind": "golden_mean"})


@pytest.fixture
def light_config(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Run from a directory whose .untwist.toml asks for a light battery."""
    (tmp_path / ".untwist.toml").write_text(
        "[battery]\n"
        "exhaustive_radius = 1\n"
        "random_pairs = 10\n"
        "random_radius = 2\n"
        "verify_samples = 20\n"
        "\n"
        "[run]\n"
        "radius = 1\n"
    )
    monkeypatch.chdir(tmp_path)
    return tmp_path


@pytest.fixture
def mock_workflows_console(mocker: MockerFixture) -> MockConsoleProtocol:
    """Mock workflows console to suppress output."""
    return mocker.patch("src.workflows.console")


@pytest.fixture
def mock_main_console(mocker: MockerFixture) -> MockConsoleProtocol:
    """Mock main console to suppress output."""
    return mocker.patch("src.main.console")


@pytest.fixture
def git_repo(tmp_path: Path) -> Path:
    """Create a temporary git repository."""
    repo = tmp_path / "repo"
    repo.mkdir()
    (repo / ".git").mkdir()
    return repo


@pytest.fixture
def z_bundle_file(tmp_path: Path) -> Path:
    """The ``c(1, x) = x_1`` bundle on Z."""
    path = tmp_path / "z_bundle.json"
    path.write_text(bundle_document(example_cocycle_z()).model_dump_json())
    return path


@pytest.fixture
def coboundary_bundle_file(tmp_path: Path) -> Path:
    """A random coboundary on Z^2 with its shift."""
    instance = random_coboundary_instance(random.Random(5))
    path = tmp_path / "coboundary_bundle.json"
    path.write_text(bundle_document(instance.cocycle).model_dump_json())
    return path


@pytest.fixture
def x_file(tmp_path: Path) -> Path:
    """``x = {0: 1}`` on Z over the zero background."""
    return write_json(tmp_path / "x.json", {"background": "0", "overlay": [["0", "1"]]})
