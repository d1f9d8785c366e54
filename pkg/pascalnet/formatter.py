"""
Output Formatter Module
Formats matrices and reports for terminal display
"""

from typing import Any, Dict, List, Optional, Sequence
from colorama import Fore, Style, init

from .dnp import DnpReport
from .graph import INFINITY
from .matrix import PascalMatrix
from .properties import PropertyReport
from .resilience import FailureScenario, ResilienceReport

# Initialize colorama for cross-platform colored output
init(autoreset=True)


class ReportFormatter:
    """Formats Pascal graph results for terminal output"""

    def __init__(self, use_color: bool = True):
        self.use_color = use_color

    def format_matrix(self, pm: PascalMatrix) -> str:
        """The golden 0/1 grid; never coloured"""
        return pm.to_text()

    def format_properties(self, n: int, reports: Sequence[PropertyReport],
                          summary: Optional[Dict[str, Any]] = None) -> str:
        """
        Format the property suite for one order

        Args:
            n: Order of the Pascal graph
            reports: Property reports in suite order
            summary: Optional topology summary shown above the table
        """
        output = [self._format_header(f"PG({n}) properties"), ""]

        if summary:
            output.append(self._colorize("Topology:", Fore.YELLOW))
            for key, value in summary.items():
                if isinstance(value, list):
                    value = ', '.join(f"V{v}" for v in value) or '-'
                output.append(f"  {key}: {value}")
            output.append("")

        rows = [['Property', 'Status', 'Claim', 'Witness / note']]
        for report in reports:
            detail = report.witness or report.note or ''
            rows.append([report.property_id, report.status, report.title, detail])
        output.extend(self._format_table(rows, status_column=1))
        output.append("")
        return "\n".join(output)

    def format_dnp(self, report: DnpReport) -> str:
        output = [self._format_header(f"PG({report.n}) dependable nodes"), ""]
        output.append(f"  case:            {report.label.value}")
        output.append(f"  formula indices: {self._indices(report.formula_indices)}")
        output.append(f"  oracle indices:  {self._indices(report.brute_indices)}")
        output.append(f"  degree:          {report.degree}")
        agrees = 'yes' if report.agrees else 'NO'
        output.append(f"  agrees:          {self._status(agrees, report.agrees)}")
        for item in report.paper_discrepancy:
            output.append(self._colorize(f"  discrepancy: {item}", Fore.MAGENTA))
        for item in report.notes:
            output.append(f"  note: {item}")
        output.append("")
        return "\n".join(output)

    def format_table1(self, reports: Sequence[DnpReport]) -> str:
        """Aligned reproduction of the published DNP table plus a discrepancy column"""
        rows = [['PG(n)', 'Conjecture satisfied', 'i', 'DNP', 'Degree', 'Agrees', 'Discrepancy']]
        for r in reports:
            rows.append([
                str(r.n),
                r.label.value,
                ', '.join(str(i) for i in r.formula_indices),
                ', '.join(f"V{i}" for i in r.brute_indices),
                str(r.degree),
                'yes' if r.agrees else 'NO',
                '; '.join(r.paper_discrepancy),
            ])
        output = self._format_table(rows)
        notes = [(r.n, note) for r in reports for note in r.notes]
        if notes:
            output.append("")
            output.append("Notes:")
            output.extend(f"  n={n}: {note}" for n, note in notes)
        return "\n".join(output) + "\n"

    def format_sweep(self, scenario: FailureScenario, reports: Sequence[ResilienceReport]) -> str:
        title = f"PG({scenario.n}) failure sweep"
        output = [self._format_header(title), ""]
        output.append(f"  failures per trial: {scenario.failures}")
        output.append(f"  trials: {scenario.trials}   seed: {scenario.seed}")
        output.append("")
        rows = [['Trial', 'Failed', 'Connected', 'Diameter', 'Avg hops', 'Hub', 'Kind']]
        for r in reports:
            rows.append([
                str(r.trial),
                ', '.join(str(v) for v in r.failed) or '-',
                'yes' if r.connected else 'no',
                'inf' if r.diameter_after == INFINITY else str(r.diameter_after),
                str(r.avg_hops),
                '-' if r.hub_used is None else f"V{r.hub_used}",
                r.kind,
            ])
        output.extend(self._format_table(rows))
        output.append("")
        return "\n".join(output)

    def _indices(self, indices: Sequence[int]) -> str:
        return ', '.join(f"V{i}" for i in indices) or '-'

    def _format_header(self, title: str) -> str:
        """Format a section header"""
        header = f"{'=' * 60}"
        title = f"  {title.upper()}"
        footer = f"{'=' * 60}"

        if self.use_color:
            return f"{Fore.GREEN}{Style.BRIGHT}{header}\n{title}\n{footer}{Style.RESET_ALL}"
        return f"{header}\n{title}\n{footer}"

    def _status(self, text: str, good: bool) -> str:
        return self._colorize(text, Fore.GREEN if good else Fore.RED)

    def _colorize(self, text: str, color: str, bold: bool = False) -> str:
        """Apply color to text if colors are enabled"""
        if not self.use_color:
            return text

        result = color + text
        if bold:
            result = Style.BRIGHT + result
        result += Style.RESET_ALL
        return result

    def _format_table(self, table_data: List[List[str]], status_column: Optional[int] = None) -> List[str]:
        """Fixed-width table with ASCII separators"""
        if not table_data:
            return ["  (empty table)"]

        output = []
        num_cols = max(len(row) for row in table_data)
        col_widths = [max(len(row[c]) for row in table_data if c < len(row)) for c in range(num_cols)]

        for row_idx, row in enumerate(table_data):
            formatted_cells = []
            for col_idx, cell in enumerate(row):
                padded_cell = cell.ljust(col_widths[col_idx])
                if row_idx == 0:
                    padded_cell = self._colorize(padded_cell, Fore.CYAN, bold=True)
                elif col_idx == status_column:
                    color = {'PASS': Fore.GREEN, 'FAIL': Fore.RED}.get(cell, Fore.YELLOW)
                    padded_cell = self._colorize(padded_cell, color)
                formatted_cells.append(padded_cell)

            output.append(("  | " + " | ".join(formatted_cells) + " |").rstrip())

            # Add separator after header row
            if row_idx == 0:
                output.append("  +" + "+".join("-" * (w + 2) for w in col_widths) + "+")

        return output
