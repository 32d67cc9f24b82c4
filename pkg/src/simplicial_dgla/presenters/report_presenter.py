"""
Report presenter.

Renders pipeline results (validation reports, Moore complex, DGLA,
verification, oracle tables and the sign table) using the Rich library.
"""

from typing import Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from simplicial_dgla.models.dgla import DGLA
from simplicial_dgla.models.linear import BilinearMap, ExactMatrix, format_combination
from simplicial_dgla.models.reports import ValidationReport, VerificationReport, Violation
from simplicial_dgla.models.results import OracleTables, PipelineResult
from simplicial_dgla.models.simplicial import MooreComplex

# Violations listed per report before the rest is summarized
MAX_LISTED = 20


def _degree(n: int) -> str:
    return f"L_-{n}" if n else "L_0"


def _names(prefix: str, dim: int) -> list[str]:
    return [f"{prefix}{i}" for i in range(dim)]


class ReportPresenter:
    """
    Handles display formatting for pipeline results.

    Follows Single Responsibility Principle:
    - Only concerned with presentation logic
    - No computation; everything shown is already in the result
    - Uses Rich library for terminal formatting

    Design Pattern: Presenter Pattern (from MVP)
    """

    def __init__(self, console: Optional[Console] = None):
        """
        Initialize report presenter.

        Args:
            console: Rich console for output (creates default if not provided)
        """
        self.console = console or Console()

    def present(self, result: PipelineResult) -> None:
        """Render every section present in a result."""
        self._present_header(result)
        for report in result.validations:
            self.present_validation(report)
        if result.moore is not None and result.command in {"moore", "dgla"}:
            self._present_moore(result.moore, result.homology)
            if result.peiffer:
                self._present_peiffer(result)
        if result.dgla is not None:
            self.present_dgla(result.dgla)
        if result.verification is not None:
            self.present_verification("DGLA axioms", result.verification)
        if result.comparison is not None:
            self.present_verification("Oracle comparison", result.comparison)
            self.present_sign_table(result.comparison)
        if result.oracle is not None:
            self._present_oracle(result.oracle)
        if result.failed_stage is not None:
            self.console.print(
                f"\n[red]✗ Stage '{result.failed_stage}' failed:[/red] {result.message}\n"
            )

    def _present_header(self, result: PipelineResult) -> None:
        status = "[green]✓ ok[/green]" if result.ok else "[red]✗ failed[/red]"
        self.console.print(
            Panel(
                f"[bold]{result.command}[/bold] on [cyan]{result.kind}[/cyan] input: {status}",
                border_style="cyan",
            )
        )

    def _violation_table(self, violations: tuple[Violation, ...]) -> Table:
        table = Table(show_header=True, header_style="cyan bold")
        table.add_column("Law", style="bold")
        table.add_column("Levels", style="dim")
        table.add_column("Witness")
        table.add_column("Residual", style="red")
        table.add_column("Statement", style="dim")
        for v in violations[:MAX_LISTED]:
            table.add_row(
                v.law,
                ",".join(map(str, v.levels)),
                ",".join(map(str, v.witness)),
                format_combination(v.residual, _names("e", len(v.residual))),
                v.detail,
            )
        return table

    def present_validation(self, report: ValidationReport) -> None:
        """One line per report, plus a violation table when it fails."""
        if report.ok:
            self.console.print(
                f"[green]✓[/green] {report.subject}: {report.checks} check(s) passed"
            )
            return
        self.console.print(
            f"[red]✗[/red] {report.subject}: {len(report.violations)} violation(s) "
            f"in {report.checks} check(s)"
        )
        self.console.print(self._violation_table(report.violations))
        if len(report.violations) > MAX_LISTED:
            self.console.print(f"[dim]... {len(report.violations) - MAX_LISTED} more[/dim]")

    def _present_moore(self, moore: MooreComplex, homology: tuple[int, ...]) -> None:
        table = Table(title="Moore complex", show_header=True, header_style="cyan bold")
        table.add_column("n", justify="right")
        table.add_column("dim N_n", justify="right")
        table.add_column("dim H_n", justify="right")
        table.add_column("delta_n")
        for n, dim in enumerate(moore.dims):
            delta = self._matrix(moore.delta(n)) if n >= 1 else "-"
            h = str(homology[n]) if n < len(homology) else "-"
            table.add_row(str(n), str(dim), h, delta)
        self.console.print(table)
        self.console.print(f"Moore length k = [bold]{moore.length}[/bold]")

    def _present_peiffer(self, result: PipelineResult) -> None:
        table = Table(title="Peiffer pairings", show_header=True, header_style="cyan bold")
        table.add_column("Pair")
        table.add_column("Non-zero values")
        for pair, values in result.peiffer.items():
            table.add_row(
                f"n={pair.n} {list(pair.alpha)} {list(pair.beta)}",
                self._bilinear(values, "x", "y", "z"),
            )
        self.console.print(table)

    @staticmethod
    def _matrix(m: ExactMatrix) -> str:
        if m.rows == 0 or m.cols == 0:
            return "0"
        return "; ".join(" ".join(str(v) for v in row) for row in m.to_rows())

    @staticmethod
    def _bilinear(
        table: BilinearMap,
        left: str,
        right: str,
        target: str,
        labels: Optional[tuple[list[str], list[str], list[str]]] = None,
    ) -> str:
        if labels is None:
            labels = (
                _names(left, table.left_dim),
                _names(right, table.right_dim),
                _names(target, table.target_dim),
            )
        a, b, c = labels
        entries = [
            f"[{a[i]}, {b[j]}] = {format_combination(v, c)}"
            for i, j, v in table.nonzero_entries()
        ]
        return "\n".join(entries) if entries else "0"

    def present_dgla(self, dgla: DGLA) -> None:
        """Degrees with bases, differentials and non-zero brackets."""
        labels = [[dgla.label(n, i) for i in range(dim)] for n, dim in enumerate(dgla.dims)]
        table = Table(
            title=f"DGLA of length {dgla.length}", show_header=True, header_style="cyan bold"
        )
        table.add_column("Degree")
        table.add_column("Basis")
        table.add_column("d")
        for n, dim in enumerate(dgla.dims):
            basis = ", ".join(labels[n]) if dim else "0"
            if n == 0:
                d = "0"
            else:
                columns = dgla.differentials[n - 1]
                d = ", ".join(
                    f"d {labels[n][j]} = {format_combination(columns.column(j), labels[n - 1])}"
                    for j in range(dim)
                ) or "0"
            table.add_row(_degree(n), basis, d)
        self.console.print(table)

        brackets = Table(title="Brackets", show_header=True, header_style="cyan bold")
        brackets.add_column("Degrees")
        brackets.add_column("Non-zero values")
        for (n1, n2), values in sorted(dgla.brackets.items()):
            if values.is_zero():
                continue
            text = self._bilinear(
                values, "", "", "", (labels[n1], labels[n2], labels[n1 + n2])
            )
            brackets.add_row(f"{_degree(n1)} x {_degree(n2)}", text)
        if brackets.row_count:
            self.console.print(brackets)
        else:
            self.console.print("[dim]All brackets vanish[/dim]")

    def present_verification(self, title: str, report: VerificationReport) -> None:
        """Check counts, axiom violations and oracle discrepancies."""
        counts = ", ".join(
            f"{name}: {count}" for name, count in sorted(report.check_counts.items())
        )
        mark = "[green]✓[/green]" if report.ok else "[red]✗[/red]"
        self.console.print(f"{mark} {title} ({counts})")
        if report.violations:
            self.console.print(self._violation_table(report.violations))
        if report.oracle_diffs:
            table = Table(show_header=True, header_style="cyan bold")
            table.add_column("Quantity")
            table.add_column("Degrees")
            table.add_column("Witness")
            table.add_column("Built")
            table.add_column("Oracle")
            for d in report.oracle_diffs[:MAX_LISTED]:
                table.add_row(
                    d.quantity,
                    ",".join(map(str, d.degrees)),
                    ",".join(map(str, d.witness)),
                    " ".join(str(v) for v in d.built),
                    " ".join(str(v) for v in d.oracle),
                )
            self.console.print(table)

    def present_sign_table(self, report: VerificationReport) -> None:
        """Signs of every Peiffer pair, with the prose-sign antisymmetry column."""
        if not report.sign_table:
            return
        table = Table(title="Sign table", show_header=True, header_style="cyan bold")
        for column in ("n", "alpha", "beta", "n1,n2", "shuffle", "prose", "oracle", "normalized"):
            table.add_column(column, justify="right")
        table.add_column("agrees")
        table.add_column("prose antisymmetric")
        for row in report.sign_table:
            table.add_row(
                str(row.n),
                str(list(row.alpha)),
                str(list(row.beta)),
                f"{row.n1},{row.n2}",
                f"{row.shuffle_sign:+d}",
                f"{row.prose_sign:+d}",
                f"{row.oracle_sign:+d}",
                f"{row.normalized_sign:+d}",
                "[green]yes[/green]" if row.agrees else "[red]no[/red]",
                "yes" if row.prose_antisymmetric else "[yellow]no[/yellow]",
            )
        self.console.print(table)

    def _present_oracle(self, tables: OracleTables) -> None:
        n = tables.level
        table = Table(title=f"Oracle at level {n}", show_header=True, header_style="cyan bold")
        table.add_column("Term")
        table.add_column("Values")
        if tables.differential is not None:
            table.add_row(f"d: N_{n + 1} -> N_{n}", self._matrix(tables.differential))
        for (n1, n2), values in sorted(tables.brackets.items()):
            table.add_row(f"[N_{n1}, N_{n2}]", self._bilinear(values, "x", "y", "z"))
        self.console.print(table)

    def present_schema(self, schema: dict[str, object]) -> None:
        """Print the input JSON schema."""
        self.console.print_json(data=schema)
