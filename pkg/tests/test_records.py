"""Tests for Pydantic models in src/records.py."""

import pytest
from pydantic import ValidationError

from src.constants import SCHEMA_VERSION
from src.records import (
    BundleDocument,
    CocycleDocument,
    CoeffSpec,
    ConfigurationDocument,
    GlueReportRecord,
    GroupSpec,
    ShiftDocument,
    TransferReportRecord,
)

# GroupSpec Tests


def test_group_spec_accepts_each_params_shape() -> None:
    """Params may be an integer, a list of orders or a mapping."""
    assert GroupSpec(family="free", params=3).params == 3
    assert GroupSpec(family="free_product_cyclic", params=[2, 3]).params == [2, 3]
    assert GroupSpec(family="free_abelian", params={"d": 2}).params == {"d": 2}
    assert GroupSpec(family="heisenberg").params == {}


def test_group_spec_requires_family() -> None:
    with pytest.raises(ValidationError):
        GroupSpec.model_validate({"params": 2})


# Input document defaults


def test_shift_document_defaults_to_full_two_shift() -> None:
    doc = ShiftDocument()

    assert doc.kind == "full"
    assert doc.alphabet == ["0", "1"]
    assert doc.background is None
    assert doc.windows == []


def test_cocycle_document_defaults_to_z2_coefficients() -> None:
    doc = CocycleDocument()

    assert doc.coeff == CoeffSpec(kind="cyclic", n=2)
    assert doc.rules == {}


def test_cocycle_document_parses_rule_rows() -> None:
    """Rows are ``[[symbols...], value]`` pairs."""
    doc = CocycleDocument.model_validate(
        {"window": ["e1"], "rules": {"e1": [[["0"], 0], [["1"], "1"]]}}
    )

    assert doc.rules["e1"] == [(["0"], 0), (["1"], "1")]


def test_configuration_document_overlay_pairs() -> None:
    doc = ConfigurationDocument.model_validate({"overlay": [["(0,0)", "1"]]})

    assert doc.background == "0"
    assert doc.overlay == [("(0,0)", "1")]


# Versioned records


def test_bundle_document_is_versioned() -> None:
    bundle = BundleDocument(group=GroupSpec(family="free", params=2))

    dumped = bundle.model_dump()

    assert dumped["schema_version"] == SCHEMA_VERSION
    assert dumped["shift"] is None


def test_transfer_report_record_defaults() -> None:
    """Optional sections start empty."""
    record = TransferReportRecord(
        seed=0,
        group="F_2",
        directions=["a", "b"],
        background="0",
        radius=2,
        mode="none",
        verdict="Inconclusive",
        validity="trivial",
    )

    assert record.schema_version == SCHEMA_VERSION
    assert record.transfer == []
    assert record.homomorphism is None
    assert record.glue is None


def test_glue_report_record_extends_glue_record() -> None:
    record = GlueReportRecord(ok=False, reason="too_close", shift_element="(1,0)")

    assert record.model_dump()["reason"] == "too_close"
    assert record.configuration is None
