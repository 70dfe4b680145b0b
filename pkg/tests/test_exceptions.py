"""Tests for src/exceptions.py"""

import pytest

from src.exceptions import (
    BudgetError,
    InputError,
    NotConnectedWithinRError,
    PatternEnumerationTooLargeError,
    RelatorViolationError,
    UntwistError,
)


def test_relator_violation_error() -> None:
    """Smoke test that RelatorViolationError carries its data."""
    pattern = {"(1,0)": "1", "(0,1)": "0"}

    error = RelatorViolationError(
        relator="e1 e2 e1^-1 e2^-1", pattern=pattern, value="1"
    )

    assert error.relator == "e1 e2 e1^-1 e2^-1"
    assert error.pattern == pattern
    assert "e1 e2 e1^-1 e2^-1" in str(error)
    assert isinstance(error, InputError)

    with pytest.raises(UntwistError) as exc_info:
        raise error

    assert exc_info.value.value == "1"


def test_budget_errors_are_distinct_from_input_errors() -> None:
    """Budget errors mean a cap was too small, not that the input is wrong."""
    error = PatternEnumerationTooLargeError(radius=3, needed=2**25, cap=2**16)

    assert isinstance(error, BudgetError)
    assert not isinstance(error, InputError)
    assert "B(3)" in str(error)


def test_not_connected_error_records_unbounded_components() -> None:
    """The error says whether each endpoint reaches the outer sphere."""
    error = NotConnectedWithinRError(
        "a",
        "a^-1",
        1,
        4,
        source_unbounded=True,
        target_unbounded=True,
    )

    assert error.source == "a"
    assert error.source_unbounded
    assert error.target_unbounded
    assert "B(4)" in str(error)
