"""JSON report generation."""

import json
from pathlib import Path
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from ghurwitz.harness.report import HarnessReport


def dump_json(data: Any) -> str:
    """Canonical text: two-space indent, sorted keys, trailing newline."""
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def write_json(data: Any, output_path: str | Path) -> Path:
    """Write ``data`` as canonical JSON.

    Args:
        data: JSON-compatible object.
        output_path: Destination file.

    Returns:
        Path to the written file.
    """
    path = Path(output_path)
    path.write_text(dump_json(data), encoding="utf-8")
    return path


def generate_json_report(
    report: "HarnessReport",
    output_path: str | Path = "ghurwitz.json",
) -> Path:
    """Generate the JSON report of a suite run.

    No timestamp is written, so the same run configuration always produces
    the same bytes.

    Args:
        report: Suite result to report.
        output_path: Path to save the JSON report.

    Returns:
        Path to the generated report file.
    """
    return write_json(report.to_dict(), output_path)
