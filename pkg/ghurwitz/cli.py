"""Command-line interface for ghurwitz."""

from __future__ import annotations

import logging
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Any, NoReturn, TypeVar

import click
from rich.console import Console
from rich.logging import RichHandler

from ghurwitz import __version__
from ghurwitz.analytic import (
    ComplexSampler,
    RationalFunction,
    SampleReport,
    exhibit_negativity_exponential,
    sample_im_nonneg,
)
from ghurwitz.config import (
    DEFAULT_GRID,
    DEFAULT_ORDER,
    RunConfig,
    parse_grid,
    parse_range,
    threads_from_env,
)
from ghurwitz.errors import EXIT_INPUT_ERROR, GhurwitzError, InsufficientDataError, SpecError
from ghurwitz.harness import (
    HarnessReport,
    run_equivalence_suite,
    run_quasi_stability_suite,
    run_sector_suite,
)
from ghurwitz.laurent import FactorSpec, LaurentWindow
from ghurwitz.realroots import (
    SVerdict,
    ZeroSet,
    check_interlacing,
    factor_ratio_verdict,
    laurent_to_polynomials,
)
from ghurwitz.reports import (
    dump_json,
    generate_html_report,
    generate_json_report,
    generate_markdown_report,
    print_error,
    print_harness_summary,
    print_progress,
    print_s_verdict,
    print_tnn_verdict,
    print_window,
    write_json,
)
from ghurwitz.specs import load_matrix_input, load_polynomial
from ghurwitz.structmat import MatrixView, WindowMatrix, extract_window
from ghurwitz.tnn import check_tnn

F = TypeVar("F", bound=Callable[..., Any])

#: Exit code for a negative mathematical verdict.
EXIT_NEGATIVE = 1

_KINDS = ("toeplitz", "hurwitz_type", "hurwitz_of_f", "generalized")


# -- shared plumbing -----------------------------------------------------------------


def _configure_logging(verbose: bool) -> None:
    """Route the ``ghurwitz`` logger through rich on stderr."""
    logger = logging.getLogger("ghurwitz")
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        logger.addHandler(RichHandler(console=Console(stderr=True), show_path=False))
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)


def _exit_with(console: Console, message: str, code: int) -> NoReturn:
    print_error(message, console)
    sys.exit(code)


def _run(console: Console, verbose: bool, body: Callable[[], int]) -> NoReturn:
    """Run a command body and turn its outcome or error into an exit code."""
    try:
        code = body()
    except FileNotFoundError as e:
        _exit_with(console, f"File not found: {e}", EXIT_INPUT_ERROR)
    except GhurwitzError as e:
        label = "Insufficient data" if isinstance(e, InsufficientDataError) else "Invalid input"
        _exit_with(console, f"{label}: {e}", e.exit_code)
    except Exception as e:
        if verbose:
            raise
        _exit_with(console, f"Unexpected error: {e}", EXIT_INPUT_ERROR)
    sys.exit(code)


def _verbose_option(func: F) -> F:
    return click.option(
        "--verbose", "-v", is_flag=True, default=False, help="Debug logging and progress output"
    )(func)


def _matrix_options(func: F) -> F:
    """Options that select a matrix window from ``--input`` files."""
    options = [
        click.option(
            "--input",
            "inputs",
            multiple=True,
            required=True,
            type=click.Path(path_type=Path),  # type: ignore[type-var]
            help="Series, matrix spec or window JSON (repeatable: p then q for hurwitz_type)",
        ),
        click.option("--kind", type=click.Choice(_KINDS), default=None,
                     help="Matrix kind built from series inputs"),
        click.option("--rows", default=None, help="Row range a:b"),
        click.option("--cols", default=None, help="Column range a:b"),
        click.option("--M", "M", type=int, default=2, show_default=True,
                     help="Step of the generalized Hurwitz matrix"),
        click.option("--row-offset", type=int, default=0, show_default=True,
                     help="Row index convention of the generalized matrix"),
        click.option("--pad", is_flag=True, default=False,
                     help="Pad closed sides of explicit series with zeros"),
        click.option("--exp-truncation", type=int, default=32, show_default=True,
                     help="Terms kept of each exponential factor"),
        click.option("--mode", type=click.Choice(["exact", "approx"]), default="exact",
                     show_default=True,
                     help="exact refuses truncated coefficients; approx reports tail bounds"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _suite_options(func: F) -> F:
    """Options shared by the three property suites."""
    options = [
        click.option("--count", type=int, default=50, show_default=True,
                     help="Generated instances per family"),
        click.option("--degree", type=int, default=8, show_default=True,
                     help="Largest generated polynomial degree"),
        click.option("--seed", type=int, default=0, show_default=True, help="Generator seed"),
        click.option("--samples", type=int, default=1000, show_default=True,
                     help="Random points per sampled check"),
        click.option("--tol", type=float, default=1e-9, show_default=True,
                     help="Tolerance of the sampled checks"),
        click.option("--order", "max_order", type=int, default=4, show_default=True,
                     help="Minor order checked on TNN windows"),
        click.option("--window", type=int, default=8, show_default=True,
                     help="Side of the square windows"),
        click.option("--cap-window", type=int, default=16, show_default=True,
                     help="Largest window of the negative-minor search"),
        click.option("--cap-order", type=int, default=4, show_default=True,
                     help="Largest fully enumerated order of the negative-minor search"),
        click.option("--exp-truncation", type=int, default=32, show_default=True,
                     help="Terms kept of each exponential factor"),
        click.option("--out", type=click.Path(path_type=Path), default=None,  # type: ignore[type-var]
                     help="Output JSON report file"),
        click.option("--markdown", type=click.Path(path_type=Path), default=None,  # type: ignore[type-var]
                     help="Output Markdown report file"),
        click.option("--html", type=click.Path(path_type=Path), default=None,  # type: ignore[type-var]
                     help="Output HTML report file"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _optional_range(text: str | None) -> tuple[int, int] | None:
    return None if text is None else parse_range(text)


def _backing_windows(view: MatrixView) -> list[LaurentWindow]:
    """The series windows a view reads from."""
    return [value for value in vars(view).values() if isinstance(value, LaurentWindow)]


def _resolve_window(config: RunConfig, kind: str | None) -> tuple[WindowMatrix, dict[str, Any]]:
    """Load the inputs and cut the requested window; returns it with provenance."""
    paths = [Path(p) for p in config.inputs]
    source = load_matrix_input(paths, kind, config.M, config.row_offset)
    if isinstance(source, WindowMatrix):
        if config.rows is not None and config.cols is not None:
            return source.sub_window(*config.rows, *config.cols), {"kind": "stored"}
        return source, {"kind": "stored"}
    if config.rows is None or config.cols is None:
        raise SpecError("--rows and --cols are required to build a window from a spec")
    view = source.view(*config.rows, *config.cols, pad=config.pad,
                       exp_truncation=config.exp_truncation)
    windows = _backing_windows(view)
    if config.mode == "exact" and not all(w.exact for w in windows):
        raise InsufficientDataError(
            "backing coefficients are truncated approximations; use --mode approx"
        )
    matrix = extract_window(view, *config.rows, *config.cols)
    meta: dict[str, Any] = {"kind": source.kind, "padded": config.pad}
    if config.mode == "approx":
        meta["tail_bounds"] = [w.tail_bound or 0.0 for w in windows]
    return matrix, meta


def _matrix_config(command: str, **values: Any) -> RunConfig:
    return RunConfig(
        command=command,
        inputs=tuple(str(p) for p in values["inputs"]),
        rows=_optional_range(values["rows"]),
        cols=_optional_range(values["cols"]),
        max_order=values.get("max_order") or DEFAULT_ORDER,
        mode=values["mode"],
        M=values["M"],
        row_offset=values["row_offset"],
        pad=values["pad"],
        exp_truncation=values["exp_truncation"],
        threads=threads_from_env(),
    )


def _suite_config(command: str, **values: Any) -> RunConfig:
    return RunConfig(
        command=command,
        count=values["count"],
        degree=values["degree"],
        seed=values["seed"],
        samples=values["samples"],
        tol=values["tol"],
        max_order=values["max_order"],
        window=values["window"],
        cap_window=values["cap_window"],
        cap_order=values["cap_order"],
        exp_truncation=values["exp_truncation"],
        M=values.get("M", 3),
        grid=values.get("grid", DEFAULT_GRID),
        threads=threads_from_env(),
    )


def _emit_suite(
    report: HarnessReport,
    console: Console,
    out: Path | None,
    markdown: Path | None,
    html: Path | None,
    verbose: bool,
) -> int:
    """Write the suite reports and map the outcome to an exit code."""
    json_path = generate_json_report(report, out or Path(f"ghurwitz-{report.suite}.json"))
    if verbose:
        print_progress(f"JSON report saved to: {json_path}", console)
    if markdown:
        md_path = generate_markdown_report(report, markdown)
        if verbose:
            print_progress(f"Markdown report saved to: {md_path}", console)
    if html:
        html_path = generate_html_report(report, html)
        if verbose:
            print_progress(f"HTML report saved to: {html_path}", console)

    print_harness_summary(report, console=console, verbose=verbose)
    console.print(f"[dim]>[/dim] JSON report: [cyan]{json_path}[/cyan]")
    if markdown:
        console.print(f"[dim]>[/dim] Markdown report: [cyan]{markdown}[/cyan]")
    if html:
        console.print(f"[dim]>[/dim] HTML report: [cyan]{html}[/cyan]")
    console.print()

    if report.count("fail"):
        return EXIT_NEGATIVE
    if not report.passed:
        return InsufficientDataError.exit_code
    return 0


# -- commands ------------------------------------------------------------------------


@click.group()
@click.version_option(version=__version__, prog_name="ghurwitz")
def main() -> None:
    """ghurwitz: total nonnegativity of Hurwitz-type and Toeplitz matrices.

    Build structured matrix windows from series specs, check them for
    negative minors, and run the property suites that compare interlacing,
    stability and sector verdicts with total nonnegativity.

    The GHURWITZ_THREADS environment variable sets the worker count.
    """
    pass


@main.command()
@_matrix_options
@click.option("--out", type=click.Path(path_type=Path), default=None,  # type: ignore[type-var]
              help="Output window JSON (default: stdout)")
@_verbose_option
def build(out: Path | None, verbose: bool, **values: Any) -> None:
    """Build a matrix window and write it as JSON."""
    console = Console(stderr=out is None)
    _configure_logging(verbose)

    def body() -> int:
        config = _matrix_config("build", **values)
        matrix, meta = _resolve_window(config, values["kind"])
        data = {**matrix.to_dict(), **meta}
        if out is None:
            click.echo(dump_json(data), nl=False)
            return 0
        write_json(data, out)
        print_window(matrix, console)
        console.print(f"[dim]>[/dim] Window: [cyan]{out}[/cyan]")
        return 0

    _run(console, verbose, body)


@main.command(name="check-tnn")
@_matrix_options
@click.option("--order", "max_order", type=int, default=None,
              help="Largest minor order (default: min(4, rows, cols))")
@click.option("--out", type=click.Path(path_type=Path), default=None,  # type: ignore[type-var]
              help="Output verdict JSON")
@_verbose_option
def check_tnn_command(
    max_order: int | None, out: Path | None, verbose: bool, **values: Any
) -> None:
    """Check all minors of a window up to an order; exit 1 on a negative minor."""
    console = Console()
    _configure_logging(verbose)

    def body() -> int:
        config = _matrix_config("check-tnn", max_order=max_order, **values)
        matrix, meta = _resolve_window(config, values["kind"])
        order = max_order if max_order is not None else min(
            config.max_order, matrix.n_rows, matrix.n_cols
        )
        if verbose:
            print_progress(
                f"Checking {matrix.n_rows}x{matrix.n_cols} window up to order {order} "
                f"on {config.threads} worker(s)",
                console,
            )
        verdict = check_tnn(matrix, order, workers=config.threads)
        if out:
            write_json({"verdict": verdict.to_dict(), "matrix": meta,
                        "config": config.to_dict()}, out)
        print_tnn_verdict(verdict, console)
        return 0 if verdict.passed else EXIT_NEGATIVE

    _run(console, verbose, body)


def _factor_numeric(q: FactorSpec, p: FactorSpec, config: RunConfig) -> dict[str, Any]:
    """Numeric confirmation for a ratio of product forms."""
    dA, dA0 = q.A - p.A, q.A0 - p.A0
    if dA or dA0:
        if dA * dA0 < 0:
            return {"skipped": "mixed exponential parameters"}
        exhibit = exhibit_negativity_exponential(float(abs(dA)), float(abs(dA0)), tol=config.tol)
        return {"exponential_exhibit": None if exhibit is None else exhibit.to_dict()}
    if q.pos_poles or q.neg_poles or p.pos_poles or p.neg_poles:
        return {"skipped": "poles on the positive axis"}
    big_p, big_q = laurent_to_polynomials(
        ZeroSet(p.pos_zeros, p.neg_zeros, p.zero_at_origin),
        ZeroSet(q.pos_zeros, q.neg_zeros, q.zero_at_origin),
        j=q.j - p.j,
    )
    sampler = ComplexSampler("upper", count=config.samples, seed=config.seed)
    return {"sampler": sample_im_nonneg(RationalFunction(big_q, big_p), sampler, config.tol).to_dict()}


@main.command(name="check-s")
@click.option("--input", "inputs", multiple=True, required=True,
              type=click.Path(path_type=Path),  # type: ignore[type-var]
              help="Two files: the denominator p, then the numerator q")
@click.option("--mode", type=click.Choice(["exact", "approx"]), default="exact",
              show_default=True, help="exact adds the zero/pole chain verdict")
@click.option("--samples", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--tol", type=float, default=1e-9, show_default=True)
@click.option("--out", type=click.Path(path_type=Path), default=None,  # type: ignore[type-var]
              help="Output verdict JSON")
@_verbose_option
def check_s(
    inputs: tuple[Path, ...],
    mode: str,
    samples: int,
    seed: int,
    tol: float,
    out: Path | None,
    verbose: bool,
) -> None:
    """Decide whether F = q/p is an S-function; exit 1 if it is not."""
    console = Console()
    _configure_logging(verbose)

    def body() -> int:
        if len(inputs) != 2:
            raise SpecError("check-s needs exactly two --input files (p, then q)")
        config = RunConfig(command="check-s", inputs=tuple(str(p) for p in inputs),
                           mode=mode, samples=samples, seed=seed, tol=tol,  # type: ignore[arg-type]
                           threads=threads_from_env())
        p, q = (load_polynomial(path) for path in inputs)
        result: dict[str, Any] = {"config": config.to_dict()}
        verdict: SVerdict | None = None
        sample: SampleReport | None = None
        if isinstance(p, FactorSpec) or isinstance(q, FactorSpec):
            if not (isinstance(p, FactorSpec) and isinstance(q, FactorSpec)):
                raise SpecError("p and q must both be polynomials or both be product forms")
            verdict = factor_ratio_verdict(q, p)
            result.update(_factor_numeric(q, p, config))
        else:
            if p.is_zero:
                raise SpecError("the denominator p must be nonzero")
            sampler = ComplexSampler("upper", count=samples, seed=seed)
            sample = sample_im_nonneg(RationalFunction(q, p), sampler, tol)
            result["sampler"] = sample.to_dict()
            if mode == "exact":
                verdict = check_interlacing(p, q)
        if verdict is not None:
            result["s_verdict"] = verdict.to_dict()
            print_s_verdict(verdict, sample, console)
        elif sample is not None:
            label = "pass" if sample.passed else "fail"
            console.print(f"Sampler {label} (margin {sample.margin:.3g})")
        if out:
            write_json(result, out)
        passed = verdict.is_s_function if verdict is not None else bool(sample and sample.passed)
        return 0 if passed else EXIT_NEGATIVE

    _run(console, verbose, body)


@main.command()
@_suite_options
@click.option("--grid", default="0,1/2,1,2", show_default=True,
              help="Weights A, B of the Toeplitz combinations")
@_verbose_option
def equivalence(
    out: Path | None, markdown: Path | None, html: Path | None, verbose: bool, grid: str,
    **values: Any,
) -> None:
    """Interlacing zeros vs TNN Toeplitz and Hurwitz-type matrices."""
    console = Console()
    _configure_logging(verbose)

    def body() -> int:
        config = _suite_config("equivalence", grid=parse_grid(grid), **values)
        if verbose:
            print_progress(f"Running equivalence suite on {config.threads} worker(s)", console)
        report = run_equivalence_suite(config)
        return _emit_suite(report, console, out, markdown, html, verbose)

    _run(console, verbose, body)


@main.command(name="quasi-stability")
@_suite_options
@_verbose_option
def quasi_stability(
    out: Path | None, markdown: Path | None, html: Path | None, verbose: bool, **values: Any
) -> None:
    """Routh quasi-stability vs TNN Hurwitz matrices."""
    console = Console()
    _configure_logging(verbose)

    def body() -> int:
        config = _suite_config("quasi-stability", **values)
        if verbose:
            print_progress(f"Running quasi-stability suite on {config.threads} worker(s)", console)
        report = run_quasi_stability_suite(config)
        return _emit_suite(report, console, out, markdown, html, verbose)

    _run(console, verbose, body)


@main.command()
@_suite_options
@click.option("--M", "M", type=int, default=3, show_default=True, help="Sector index")
@_verbose_option
def sector(
    out: Path | None, markdown: Path | None, html: Path | None, verbose: bool, **values: Any
) -> None:
    """Zero-free sectors from TNN Hurwitz-type matrices of the M-way split."""
    console = Console()
    _configure_logging(verbose)

    def body() -> int:
        config = _suite_config("sector", **values)
        if verbose:
            print_progress(f"Running sector suite with M = {config.M}", console)
        report = run_sector_suite(config)
        return _emit_suite(report, console, out, markdown, html, verbose)

    _run(console, verbose, body)


if __name__ == "__main__":
    main()
