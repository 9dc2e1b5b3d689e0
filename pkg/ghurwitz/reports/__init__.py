"""Report generation for windows, verdicts and suite results."""

from ghurwitz.reports.console_report import (
    print_error,
    print_harness_summary,
    print_progress,
    print_s_verdict,
    print_tnn_verdict,
    print_window,
)
from ghurwitz.reports.html_report import generate_html_report, render_html
from ghurwitz.reports.json_report import dump_json, generate_json_report, write_json
from ghurwitz.reports.markdown_report import generate_markdown_report, render_markdown

__all__ = [
    "dump_json",
    "generate_html_report",
    "generate_json_report",
    "generate_markdown_report",
    "print_error",
    "print_harness_summary",
    "print_progress",
    "print_s_verdict",
    "print_tnn_verdict",
    "print_window",
    "render_html",
    "render_markdown",
    "write_json",
]
