"""Output: engine results to JSON records, and records to text.

- Serializers: engine objects to versioned pydantic records and documents
- Formatters: records to rich-markup text
"""

from src.output.formatters import format_record
from src.output.serializers import (
    bundle_document,
    certificate_record,
    cocycle_document,
    configuration_document,
    end_report_record,
    glue_report_record,
    periodic_record,
    shift_document,
    transfer_report_record,
    validation_record,
    witness_record,
)

__all__ = [
    "bundle_document",
    "certificate_record",
    "cocycle_document",
    "configuration_document",
    "end_report_record",
    "format_record",
    "glue_report_record",
    "periodic_record",
    "shift_document",
    "transfer_report_record",
    "validation_record",
    "witness_record",
]
