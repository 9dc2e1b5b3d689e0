"""HTML report generation."""

import json
from pathlib import Path
from typing import TYPE_CHECKING

from jinja2 import Template

if TYPE_CHECKING:
    from ghurwitz.harness.report import HarnessReport


HTML_TEMPLATE = """<!DOCTYPE html>
<html lang="en">
<head>
    <meta charset="UTF-8">
    <meta name="viewport" content="width=device-width, initial-scale=1.0">
    <title>ghurwitz {{ suite }} suite</title>
    <style>
        * {
            margin: 0;
            padding: 0;
            box-sizing: border-box;
        }
        body {
            font-family: -apple-system, BlinkMacSystemFont, 'Segoe UI', Roboto, sans-serif;
            line-height: 1.6;
            color: #333;
            background: #f5f5f5;
            padding: 20px;
        }
        .container {
            max-width: 1200px;
            margin: 0 auto;
            background: white;
            padding: 40px;
            border-radius: 8px;
            box-shadow: 0 2px 4px rgba(0,0,0,0.1);
        }
        h1 {
            color: #2c3e50;
            margin-bottom: 10px;
        }
        h2 {
            color: #2c3e50;
            margin: 30px 0 15px;
            padding-bottom: 10px;
            border-bottom: 2px solid #3498db;
        }
        .verdict {
            font-size: 24px;
            font-weight: bold;
            margin-bottom: 20px;
        }
        .verdict.good { color: #27ae60; }
        .verdict.bad { color: #e74c3c; }
        .summary-grid {
            display: grid;
            grid-template-columns: repeat(auto-fit, minmax(160px, 1fr));
            gap: 15px;
        }
        .summary-item {
            background: #ecf0f1;
            padding: 15px;
            border-radius: 4px;
        }
        .summary-item strong {
            display: block;
            color: #7f8c8d;
            font-size: 12px;
            text-transform: uppercase;
            margin-bottom: 5px;
        }
        .summary-item .value {
            font-size: 24px;
            font-weight: bold;
            color: #2c3e50;
        }
        table {
            width: 100%;
            border-collapse: collapse;
            font-size: 14px;
        }
        th, td {
            text-align: left;
            padding: 6px 10px;
            border-bottom: 1px solid #eee;
        }
        tr.fail td { background: #fdecea; }
        tr.inconclusive td { background: #fef5e7; }
        pre {
            font-family: 'Courier New', monospace;
            font-size: 13px;
            background: #f8f9fa;
            padding: 10px;
            border-radius: 3px;
            overflow-x: auto;
        }
    </style>
</head>
<body>
    <div class="container">
        <h1>ghurwitz {{ suite }} suite</h1>
        <div class="verdict {{ 'good' if passed else 'bad' }}">{{ 'PASS' if passed else 'FAIL' }}</div>

        <div class="summary-grid">
            {% for status, count in summary.items() %}
            <div class="summary-item">
                <strong>{{ status }}</strong>
                <div class="value">{{ count }}</div>
            </div>
            {% endfor %}
            <div class="summary-item">
                <strong>inconclusive share</strong>
                <div class="value">{{ "%.1f"|format(inconclusive_share * 100) }}%</div>
            </div>
        </div>

        {% if failures %}
        <h2>Failures</h2>
        {% for result in failures %}
        <h3>{{ result.label }}</h3>
        <p>{{ result.note }}</p>
        <pre>{{ result.witness_json }}</pre>
        {% endfor %}
        {% endif %}

        <h2>Instances</h2>
        <table>
            <tr><th>#</th><th>Instance</th><th>Status</th><th>Expected</th><th>Note</th></tr>
            {% for result in instances %}
            <tr class="{{ result.status }}">
                <td>{{ result.index }}</td>
                <td>{{ result.label }}</td>
                <td>{{ result.status }}</td>
                <td>{{ '-' if result.expected is none else result.expected }}</td>
                <td>{{ result.note }}</td>
            </tr>
            {% endfor %}
        </table>

        <h2>Run configuration</h2>
        <pre>{{ config_json }}</pre>
    </div>
</body>
</html>
"""


def render_html(report: "HarnessReport") -> str:
    """Render a suite result as a standalone HTML page."""
    failures = [
        {
            "label": result.label,
            "note": result.note,
            "witness_json": json.dumps(result.witness, indent=2, sort_keys=True),
        }
        for result in report.failures
    ]
    template = Template(HTML_TEMPLATE, autoescape=True)
    return template.render(
        suite=report.suite,
        passed=report.passed,
        summary=report.summary(),
        inconclusive_share=report.inconclusive_share,
        failures=failures,
        instances=report.instances,
        config_json=json.dumps(report.config, indent=2, sort_keys=True),
    )


def generate_html_report(
    report: "HarnessReport",
    output_path: str | Path = "ghurwitz.html",
) -> Path:
    """Generate an HTML report of a suite run.

    Args:
        report: Suite result to report.
        output_path: Path to save the HTML report.

    Returns:
        Path to the generated report file.
    """
    path = Path(output_path)
    with path.open("w", encoding="utf-8") as f:
        f.write(render_html(report))
    return path
