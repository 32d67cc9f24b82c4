"""Main Typer application for the simplicial DGLA toolkit."""

import logging
import sys
from pathlib import Path
from typing import Annotated, Optional

import typer
from rich.console import Console
from rich.logging import RichHandler

from simplicial_dgla import __version__
from simplicial_dgla.gateways.base import DocumentParseError, LoadedDocument
from simplicial_dgla.gateways.json_document_gateway import JsonDocumentGateway
from simplicial_dgla.infrastructure.config import config
from simplicial_dgla.infrastructure.generator_factory import SimplicialSourceFactory
from simplicial_dgla.models.documents import RunOptions
from simplicial_dgla.models.exceptions import InvalidPresentationError, SimplicialDglaError
from simplicial_dgla.models.results import PipelineResult
from simplicial_dgla.presenters.report_presenter import ReportPresenter
from simplicial_dgla.services.pipeline_service import PipelineService

logger = logging.getLogger(__name__)

app = typer.Typer(
    name="simplicial-dgla",
    help="Simplicial Lie algebras, Moore complexes and their k-term DGLAs",
    add_completion=False,
)

console = Console()
error_console = Console(stderr=True)

EXIT_OK = 0
EXIT_MATH = 1
EXIT_INPUT = 2

InputArgument = Annotated[
    Path, typer.Argument(help="Input document (JSON)", show_default=False)
]
OutOption = Annotated[
    Optional[Path], typer.Option("--out", "-o", help="Write the report to this file")
]
TruncationOption = Annotated[
    Optional[int],
    typer.Option("--truncation", "-K", min=1, help="Top stored level K (overrides the input)"),
]
FormatOption = Annotated[
    Optional[str],
    typer.Option("--format", "-f", help="Report format: json or text (overrides OUTPUT_FORMAT)"),
]


@app.callback()
def main() -> None:
    """
    Simplicial DGLA toolkit.

    Validates crossed modules, 2-crossed modules and simplicial Lie algebras,
    computes Moore complexes and builds the DGLA of a finite Moore complex,
    checking it against the superfield oracle.
    """
    logging.basicConfig(
        level=config.logging.level,
        format="%(message)s",
        handlers=[RichHandler(console=error_console, show_path=False)],
        force=True,
    )


def _service() -> PipelineService:
    factory = SimplicialSourceFactory(config.computation)
    return PipelineService(factory, config.computation)


def _gateway() -> JsonDocumentGateway:
    return JsonDocumentGateway(indent=config.output.json_indent)


def _input_error(message: str) -> typer.Exit:
    error_console.print(f"[red]Error:[/red] {message}")
    return typer.Exit(code=EXIT_INPUT)


def _resolve_format(output_format: Optional[str]) -> str:
    fmt = (output_format or config.output.format).lower()
    if fmt not in {"json", "text"}:
        raise _input_error(f"Invalid format '{output_format}'. Must be 'json' or 'text'")
    return fmt


def _emit(
    result: PipelineResult,
    input_sha256: str,
    output_format: Optional[str],
    out: Optional[Path],
) -> None:
    """Write the report and exit with the status of the result."""
    gateway = _gateway()
    fmt = _resolve_format(output_format)
    if fmt == "json":
        text = gateway.dumps(gateway.to_output(result, input_sha256))
        if out is None:
            sys.stdout.write(text)
        else:
            out.write_text(text, encoding="utf-8")
    elif out is None:
        ReportPresenter(console).present(result)
    else:
        with out.open("w", encoding="utf-8") as handle:
            ReportPresenter(Console(file=handle, width=120)).present(result)
    if out is not None:
        error_console.print(f"[green]✓[/green] Report written to {out}")

    if result.failed_stage is not None:
        error_console.print(f"[red]Failed stage:[/red] {result.failed_stage}")
    raise typer.Exit(code=EXIT_OK if result.ok else EXIT_MATH)


def _load(path: Path) -> LoadedDocument:
    try:
        return _gateway().read(path)
    except DocumentParseError as e:
        raise _input_error(str(e)) from e


def _run(
    command: str,
    path: Path,
    truncation: Optional[int],
    output_format: Optional[str],
    out: Optional[Path],
    level: Optional[int] = None,
) -> None:
    """Shared body of the pipeline commands."""
    _resolve_format(output_format)
    loaded = _load(path)
    if truncation is None:
        truncation = loaded.document.options.truncation
    try:
        source = _gateway().to_source(loaded)
    except DocumentParseError as e:
        raise _input_error(str(e)) from e
    except InvalidPresentationError as e:
        logger.warning(f"Presentation rejected: {e}")
        result = PipelineResult(
            command=command,
            kind=loaded.kind,
            validations=(e.report,) if e.report is not None else (),
            failed_stage="validate",
            message=str(e),
        )
        _emit(result, loaded.sha256, output_format, out)
        return

    service = _service()
    try:
        if command == "validate":
            result = service.validate(source, truncation)
        elif command == "moore":
            result = service.moore(source, truncation)
        elif command == "dgla":
            result = service.dgla(source, truncation)
        elif level is None:
            raise _input_error("The oracle command needs a level")
        else:
            result = service.oracle(source, level, truncation)
    except ValueError as e:
        # LevelOutOfRangeError and other unusable requests
        raise _input_error(str(e)) from e
    except SimplicialDglaError as e:
        error_console.print(f"[red]{command.capitalize()} failed:[/red] {e}")
        raise typer.Exit(code=EXIT_MATH) from e
    _emit(result, loaded.sha256, output_format, out)


@app.command()
def validate(
    input_file: InputArgument,
    out: OutOption = None,
    truncation: TruncationOption = None,
    output_format: FormatOption = None,
) -> None:
    """
    Validate a presentation and its simplicial Lie algebra.

    Exit code 0 when every law holds, 1 when a law fails (the report names
    the law and the witness), 2 when the input cannot be read.

    \b
    Examples:
        simplicial-dgla validate tests/fixtures/documents/crossed_module.json
        simplicial-dgla validate input.json --format json --out report.json
    """
    _run("validate", input_file, truncation, output_format, out)


@app.command()
def moore(
    input_file: InputArgument,
    out: OutOption = None,
    truncation: TruncationOption = None,
    output_format: FormatOption = None,
) -> None:
    """Compute the Moore complex, its homology and the Peiffer pairings."""
    _run("moore", input_file, truncation, output_format, out)


@app.command()
def dgla(
    input_file: InputArgument,
    out: OutOption = None,
    truncation: TruncationOption = None,
    output_format: FormatOption = None,
    recheck: Annotated[
        bool,
        typer.Option(
            "--recheck", help="Treat INPUT_FILE as an output document and re-verify its DGLA"
        ),
    ] = False,
) -> None:
    """
    Build the DGLA of a finite Moore complex, verify it and compare with the oracle.

    \b
    Examples:
        simplicial-dgla dgla tests/fixtures/documents/crossed_module.json
        simplicial-dgla dgla input.json -f json -o out.json
        simplicial-dgla dgla out.json --recheck
    """
    if not recheck:
        _run("dgla", input_file, truncation, output_format, out)
        return
    _resolve_format(output_format)
    try:
        algebra, digest = _gateway().read_dgla(input_file)
    except DocumentParseError as e:
        raise _input_error(str(e)) from e
    _emit(_service().recheck(algebra), digest, output_format, out)


@app.command()
def oracle(
    input_file: InputArgument,
    level: Annotated[int, typer.Option("--level", "-n", min=0, help="Level n <= Moore length")],
    out: OutOption = None,
    truncation: TruncationOption = None,
    output_format: FormatOption = None,
) -> None:
    """Print the normalized oracle differential and brackets at one level."""
    _run("oracle", input_file, truncation, output_format, out, level=level)


@app.command()
def nerve(
    input_file: InputArgument,
    out: OutOption = None,
    truncation: TruncationOption = None,
) -> None:
    """
    Write the simplicial Lie algebra of a presentation as a simplicial input document.

    \b
    Examples:
        simplicial-dgla nerve tests/fixtures/documents/crossed_module.json -o nerve.json
        simplicial-dgla validate nerve.json
    """
    loaded = _load(input_file)
    if truncation is None:
        truncation = loaded.document.options.truncation
    gateway = _gateway()
    try:
        source = gateway.to_source(loaded)
        g = SimplicialSourceFactory(config.computation).create(source, truncation)
    except (DocumentParseError, ValueError) as e:
        raise _input_error(str(e)) from e
    except SimplicialDglaError as e:
        error_console.print(f"[red]Generation failed:[/red] {e}")
        raise typer.Exit(code=EXIT_MATH) from e

    text = gateway.dump_input(
        gateway.to_simplicial_document(g, RunOptions(truncation=g.truncation))
    )
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")
        error_console.print(f"[green]✓[/green] Simplicial document written to {out}")


@app.command()
def schema() -> None:
    """Print the JSON schema of input documents."""
    ReportPresenter(console).present_schema(_gateway().input_schema())


@app.command()
def version() -> None:
    """Display application version information."""
    console.print(f"\n[cyan]Simplicial DGLA[/cyan] version [bold]{__version__}[/bold]\n")
