"""Tests for error handling across the CLI, the loaders and report writing."""

from pathlib import Path

import pytest
from click.testing import CliRunner
from pytest_mock import MockerFixture

from src.constants import EXIT_INPUT_ERROR
from src.exceptions import BallTooLargeError, BudgetError, InputError, ParseError
from src.groups import FreeGroup
from src.main import cli
from tests.conftest import write_json


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def _last_printed(mock_console) -> str:
    return str(mock_console.print.call_args_list[-1])


# --- Budget errors ---


def test_ball_cap_stops_enumeration() -> None:
    """Balls past the cap raise instead of growing without bound."""
    f2 = FreeGroup(2, ball_cap=50)

    with pytest.raises(BallTooLargeError) as exc_info:
        f2.ball(4)

    assert isinstance(exc_info.value, BudgetError)
    assert exc_info.value.cap == 50


def test_cli_reports_budget_errors(
    runner: CliRunner, mock_main_console, light_config: Path, f2_group_file: Path
) -> None:
    """A ``--cap`` too small for the schedule exits 2 without a report."""
    result = runner.invoke(cli, ["ends", "--group", str(f2_group_file), "--cap", "50"])

    assert result.exit_code == EXIT_INPUT_ERROR
    assert result.stdout == ""
    assert "Budget Exceeded" in _last_printed(mock_main_console)


# --- Input errors ---


@pytest.mark.parametrize(
    "document",
    [
        {"family": "free", "params": {"r": 0}},
        {"family": "free_abelian", "params": {"d": "two"}},
        {"family": "lamplighter"},
        {"params": {"d": 2}},
    ],
)
def test_cli_rejects_bad_group_documents(
    runner: CliRunner, mock_main_console, light_config: Path, document: dict
) -> None:
    group = write_json(light_config / "g.json", document)

    result = runner.invoke(cli, ["ends", "--group", str(group)])

    assert result.exit_code == EXIT_INPUT_ERROR
    assert "Input Error" in _last_printed(mock_main_console)


def test_cli_rejects_configuration_outside_shift(
    runner: CliRunner,
    mock_main_console,
    light_config: Path,
    z_group_file: Path,
    golden_shift_file: Path,
) -> None:
    """Two adjacent ones are not a point of the golden mean shift."""
    z = write_json(light_config / "z.json", {"overlay": [["0", "1"], ["1", "1"]]})

    result = runner.invoke(
        cli,
        [
            "periodize",
            "--group",
            str(z_group_file),
            "--shift",
            str(golden_shift_file),
            "--z",
            str(z),
            "--period",
            "8",
        ],
    )

    assert result.exit_code == EXIT_INPUT_ERROR
    assert "Input Error" in _last_printed(mock_main_console)


def test_input_errors_share_a_base_class() -> None:
    error = ParseError("group", "oops")

    assert isinstance(error, InputError)
    assert "oops" in str(error)


# --- Report writing ---


@pytest.mark.parametrize(
    ("error_type", "error_msg"),
    [
        (PermissionError, "Permission denied"),
        (OSError, "No space left on device"),
    ],
)
def test_cli_reports_write_failures(
    runner: CliRunner,
    mock_main_console,
    mocker: MockerFixture,
    light_config: Path,
    z_bundle_file: Path,
    error_type: type[OSError],
    error_msg: str,
) -> None:
    mocker.patch("src.workflows.write_report", side_effect=error_type(error_msg))

    result = runner.invoke(
        cli, ["untwist", "--cocycle", str(z_bundle_file), "--out", "report.json"]
    )

    assert result.exit_code == EXIT_INPUT_ERROR
    printed = _last_printed(mock_main_console)
    assert "Output Error" in printed
    assert error_msg in printed

