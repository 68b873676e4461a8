"""
Output Formatters - CSV, markdown and JSON-lines rendering of rows and records
"""

import csv
import io
import json
from enum import Enum
from typing import Any, Dict, Iterable, List, Mapping, Sequence

from analysis import ErrorRow

ROW_FIELDS = ("x", "bound", "kind", "reference", "error", "out_of_validity")


class OutputFormat(str, Enum):
    """Serialization formats of the command-line front-end."""

    CSV = "csv"
    MARKDOWN = "markdown"
    JSONLINES = "jsonlines"


def format_number(value: float) -> str:
    """17 significant digits: lossless for float64."""
    return format(value, ".17g")


def format_short(value: float) -> str:
    """3 significant digits, as in the printed table."""
    return format(value, ".3g")


def _cell(value: Any, short: bool) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_short(value) if short else format_number(value)
    if isinstance(value, Enum):
        return str(value.value)
    return str(value)


def _json_value(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    return value


def row_record(row: ErrorRow) -> Dict[str, Any]:
    """ErrorRow keyed by the CSV header names."""
    return {
        "x": row.x,
        "bound": row.bound_value,
        "kind": row.kind,
        "reference": row.reference_value,
        "error": row.error,
        "out_of_validity": row.out_of_validity,
    }


def render_records(records: Sequence[Mapping[str, Any]], fields: Sequence[str], fmt: OutputFormat) -> str:
    """
    Render homogeneous records.

    Args:
        records: Mappings that contain every field
        fields: Column order
        fmt: Output format

    Returns:
        Text with "\\n" line endings, ending in a newline
    """
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSONLINES:
        lines = [json.dumps({f: _json_value(r[f]) for f in fields}) for r in records]
        return "".join(line + "\n" for line in lines)

    short = fmt is OutputFormat.MARKDOWN
    table = [[_cell(r[f], short) for f in fields] for r in records]
    if fmt is OutputFormat.MARKDOWN:
        lines = ["| " + " | ".join(fields) + " |", "|" + "---|" * len(fields)]
        lines.extend("| " + " | ".join(cells) + " |" for cells in table)
        return "\n".join(lines) + "\n"

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(fields)
    writer.writerows(table)
    return buffer.getvalue()


def render_rows(rows: Iterable[ErrorRow], fmt: OutputFormat) -> str:
    """ErrorRows with the x,bound,kind,reference,error,out_of_validity columns."""
    return render_records([row_record(r) for r in rows], ROW_FIELDS, fmt)


def _flatten(prefix: str, value: Any, out: Dict[str, Any]) -> None:
    if isinstance(value, Mapping):
        for key, inner in value.items():
            _flatten(f"{prefix}_{key}" if prefix else key, inner, out)
    elif isinstance(value, (list, tuple)):
        for i, inner in enumerate(value):
            _flatten(f"{prefix}_{i}", inner, out)
    else:
        out[prefix] = value


def render_record(record: Mapping[str, Any], fmt: OutputFormat) -> str:
    """
    One key/value record, e.g. a report.

    Nested fields are flattened with "_" (bracket -> bracket_0, bracket_1).
    CSV and JSON-lines give one row under a header; markdown gives a
    two-column field/value table.
    """
    fmt = OutputFormat(fmt)
    flat: Dict[str, Any] = {}
    _flatten("", dict(record), flat)
    if fmt is OutputFormat.MARKDOWN:
        pairs = [{"field": k, "value": v} for k, v in flat.items()]
        return render_records(pairs, ("field", "value"), fmt)
    return render_records([flat], list(flat.keys()), fmt)


def parse_rows_csv(text: str) -> List[Dict[str, Any]]:
    """Read back render_rows CSV output into typed values."""
    parsed = []
    for raw in csv.DictReader(io.StringIO(text)):
        parsed.append(
            {
                "x": float(raw["x"]),
                "bound": float(raw["bound"]),
                "kind": raw["kind"],
                "reference": float(raw["reference"]),
                "error": float(raw["error"]),
                "out_of_validity": raw["out_of_validity"] == "true",
            }
        )
    return parsed
