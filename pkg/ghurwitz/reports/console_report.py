"""Rich-based console reporting for windows, verdicts and suite results."""

from __future__ import annotations

from typing import TYPE_CHECKING

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from ghurwitz.rational import format_rational

if TYPE_CHECKING:
    from ghurwitz.analytic import SampleReport
    from ghurwitz.harness.report import HarnessReport, InstanceResult
    from ghurwitz.realroots import SVerdict
    from ghurwitz.structmat import WindowMatrix
    from ghurwitz.tnn import TnnVerdict


def _get_status_style(status: str) -> str:
    """Get Rich style for an instance status.

    Args:
        status: One of the harness statuses.

    Returns:
        Rich style string
    """
    styles = {
        "pass": "green",
        "fail": "bold red",
        "inconclusive": "yellow",
        "skipped": "dim",
        "recorded": "cyan",
    }
    return styles.get(status, "dim")


def _verdict_panel(passed: bool, text: str) -> Panel:
    color = "green" if passed else "red"
    return Panel.fit(Text(text, style=f"bold {color}"), border_style=color)


def print_window(matrix: WindowMatrix, console: Console | None = None) -> None:
    """Print a window with its absolute row and column indices.

    Args:
        matrix: The window to display
        console: Rich Console instance (creates new one if None)
    """
    if console is None:
        console = Console()

    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("", style="dim", justify="right")
    for j in range(matrix.col_lo, matrix.col_hi + 1):
        table.add_column(str(j), justify="right")
    for offset, row in enumerate(matrix.entries):
        table.add_row(str(matrix.row_lo + offset), *(format_rational(x) for x in row))
    console.print(table)


def print_tnn_verdict(verdict: TnnVerdict, console: Console | None = None) -> None:
    """Print a TNN verdict, with the witness minor when one was found.

    Args:
        verdict: Outcome of the minor search
        console: Rich Console instance (creates new one if None)
    """
    if console is None:
        console = Console()

    row_lo, row_hi, col_lo, col_hi = verdict.bounds
    console.print()
    if verdict.witness is None:
        text = f"NONNEGATIVE up to order {verdict.order_checked} ({verdict.method})"
        console.print(_verdict_panel(True, text))
    else:
        console.print(_verdict_panel(False, f"NEGATIVE minor of order {verdict.witness.order}"))
        info = Table(show_header=False, box=None, padding=(0, 1))
        info.add_column(style="dim")
        info.add_column()
        info.add_row("Rows:", ", ".join(str(i) for i in verdict.witness.rows))
        info.add_row("Columns:", ", ".join(str(j) for j in verdict.witness.cols))
        info.add_row("Value:", format_rational(verdict.witness.value))
        console.print(info)
    console.print(f"[dim]Window rows {row_lo}..{row_hi}, cols {col_lo}..{col_hi}[/dim]")
    console.print()


def print_s_verdict(
    verdict: SVerdict,
    sample: SampleReport | None = None,
    console: Console | None = None,
) -> None:
    """Print the interlacing chain and the sampled ``Im z Im F(z) >= 0`` check.

    Args:
        verdict: Exact chain verdict
        sample: Numeric confirmation, if it ran
        console: Rich Console instance (creates new one if None)
    """
    if console is None:
        console = Console()

    console.print()
    label = "S-FUNCTION" if verdict.is_s_function else "NOT an S-function"
    console.print(_verdict_panel(verdict.is_s_function, label))
    if verdict.chain:
        chain = Table(title="Zeros and poles by magnitude", show_header=True,
                      header_style="bold magenta")
        chain.add_column("Kind", style="cyan")
        chain.add_column("Side")
        chain.add_column("Magnitude", justify="right")
        for link in verdict.chain:
            if link.exact:
                magnitude = format_rational(link.lo)
            else:
                magnitude = f"[{format_rational(link.lo)}, {format_rational(link.hi)}]"
            chain.add_row(link.kind, link.side, magnitude)
        console.print(chain)
    if verdict.violation:
        console.print(f"[red]Violation:[/red] {verdict.violation}")
    if sample is not None:
        style = "green" if sample.passed else "red"
        console.print(
            f"[{style}]Sampler {'pass' if sample.passed else 'fail'}[/{style}] "
            f"[dim]({sample.samples} points, seed {sample.seed}, margin {sample.margin:.3g})[/dim]"
        )
        if not sample.passed:
            z = sample.worst_z
            console.print(f"  [dim]worst point z = {z.real:.6g} {z.imag:+.6g}i[/dim]")
    console.print()


def _print_failure(result: InstanceResult, console: Console) -> None:
    console.print(f"  [bold red]{result.label}[/bold red]  {result.note}")
    if result.witness:
        for key in sorted(result.witness):
            console.print(f"     [dim]{key}: {result.witness[key]}[/dim]")


def print_harness_summary(
    report: HarnessReport,
    console: Console | None = None,
    verbose: bool = False,
) -> None:
    """Print a console summary of a suite run.

    The default view shows the status counts and the failing instances;
    ``verbose`` adds one row per instance.

    Args:
        report: Suite result to display
        console: Rich Console instance (creates new one if None)
        verbose: Whether to list every instance
    """
    if console is None:
        console = Console()

    console.print()
    console.print(
        Panel.fit(f"[bold cyan]ghurwitz {report.suite} suite[/bold cyan]", border_style="cyan")
    )
    console.print()

    counts = Table(show_header=True, header_style="bold magenta")
    counts.add_column("Status", style="cyan", no_wrap=True)
    counts.add_column("Count", justify="right")
    for status, count in report.summary().items():
        counts.add_row(Text(status, style=_get_status_style(status)), str(count))
    console.print(counts)
    console.print(
        f"[dim]Inconclusive share {report.inconclusive_share:.1%} "
        f"(allowed {report.max_inconclusive:.1%})[/dim]"
    )
    console.print()

    if verbose:
        table = Table(title="Instances", show_header=True, header_style="bold magenta")
        table.add_column("#", justify="right", style="dim")
        table.add_column("Instance", style="cyan")
        table.add_column("Status")
        table.add_column("Note", style="dim")
        for result in report.instances:
            table.add_row(
                str(result.index),
                result.label,
                Text(result.status, style=_get_status_style(result.status)),
                result.note,
            )
        console.print(table)
        console.print()

    failures = report.failures
    if failures:
        console.print("[bold]Failing instances[/bold]")
        for result in failures:
            _print_failure(result, console)
        console.print()

    console.print(_verdict_panel(report.passed, "PASS" if report.passed else "FAIL"))
    console.print()


def print_error(message: str, console: Console | None = None) -> None:
    """Print an error message.

    Args:
        message: Error message to display
        console: Rich Console instance (creates new one if None)
    """
    if console is None:
        console = Console()

    console.print()
    console.print(Panel.fit(f"[red]ERROR[/red] {message}", border_style="red"))
    console.print()


def print_progress(message: str, console: Console | None = None) -> None:
    """Print a progress message.

    Args:
        message: Progress message to display
        console: Rich Console instance (creates new one if None)
    """
    if console is None:
        console = Console()

    console.print(f"[dim]>[/dim] {message}")
