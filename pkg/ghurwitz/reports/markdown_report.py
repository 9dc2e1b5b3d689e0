"""Markdown report generation."""

import json
from pathlib import Path
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from ghurwitz.harness.report import HarnessReport, InstanceResult

_STATUS_MARK = {
    "pass": "✅ pass",
    "fail": "❌ fail",
    "inconclusive": "🟡 inconclusive",
    "skipped": "⚪ skipped",
    "recorded": "📝 recorded",
}


def _instance_row(result: "InstanceResult") -> str:
    expected = "-" if result.expected is None else str(result.expected).lower()
    note = result.note.replace("|", "\\|") or "-"
    return f"| {result.index} | `{result.label}` | {_STATUS_MARK[result.status]} | {expected} | {note} |"


def render_markdown(report: "HarnessReport") -> str:
    """Render a suite result as Markdown, suitable for issues and PR comments."""
    lines = [f"# ghurwitz {report.suite} suite", ""]
    verdict = "✅ PASS" if report.passed else "❌ FAIL"
    lines.append(f"**Verdict:** {verdict}")
    lines.append("")

    lines.append("## Summary")
    lines.append("")
    lines.append("| Status | Count |")
    lines.append("|--------|-------|")
    for status, count in report.summary().items():
        lines.append(f"| {status} | {count} |")
    lines.append(
        f"\nInconclusive share: {report.inconclusive_share:.2%} "
        f"(allowed {report.max_inconclusive:.2%})"
    )
    lines.append("")

    failures = report.failures
    if failures:
        lines.append("## Failures")
        lines.append("")
        for result in failures:
            lines.append(f"### `{result.label}`")
            lines.append("")
            lines.append(result.note or "no diagnostic")
            lines.append("")
            lines.append("```json")
            lines.append(json.dumps(result.witness, indent=2, sort_keys=True))
            lines.append("```")
            lines.append("")

    lines.append("## Instances")
    lines.append("")
    lines.append("| # | Instance | Status | Expected | Note |")
    lines.append("|---|----------|--------|----------|------|")
    lines.extend(_instance_row(result) for result in report.instances)
    lines.append("")

    lines.append("<details>")
    lines.append("<summary>Run configuration</summary>")
    lines.append("")
    lines.append("```json")
    lines.append(json.dumps(report.config, indent=2, sort_keys=True))
    lines.append("```")
    lines.append("</details>")
    lines.append("")
    return "\n".join(lines)


def generate_markdown_report(
    report: "HarnessReport",
    output_path: str | Path = "ghurwitz.md",
) -> Path:
    """Generate a Markdown report of a suite run.

    Args:
        report: Suite result to report.
        output_path: Path to save the Markdown report.

    Returns:
        Path to the generated report file.
    """
    path = Path(output_path)
    path.write_text(render_markdown(report), encoding="utf-8")
    return path
