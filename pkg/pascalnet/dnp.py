"""
Dependable Node Module
Case classification, the closed-form Dependable Node (DNP) indices, a
brute-force degree oracle, and the reproduction of the published table
"""

import json
import sys
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .errors import DomainError
from .graph import Graph, from_matrix, universal_vertices
from .matrix import generate, leading_submatrix

DEFAULT_TABLE_ORDERS = (8, 9, 10, 11, 14, 15, 16, 17, 32, 33, 34, 40)


class CaseLabel(Enum):
    """Classification of an order n"""
    CASE_1 = 'Case 1'  # n is a power of two
    CASE_2 = 'Case 2'  # generic
    CASE_N = 'Case N'  # n = 2^m + 1, two DNPs


class PublishedRow(NamedTuple):
    """One row of the published table, as printed"""
    label: str
    index: Tuple[int, ...]
    dnp: Tuple[int, ...]
    degree: int


PUBLISHED_TABLE1: Dict[int, PublishedRow] = {
    8: PublishedRow('Case 1', (5,), (5,), 7),
    9: PublishedRow('Case N', (5, 9), (5, 9), 8),
    10: PublishedRow('Case 1', (9,), (9,), 9),
    11: PublishedRow('Case 2', (9,), (9,), 10),
    14: PublishedRow('Case 1', (9,), (9,), 13),
    15: PublishedRow('Case 2', (9,), (9,), 14),
    16: PublishedRow('Case N', (9,), (9,), 15),
    17: PublishedRow('Case N', (9, 17), (9, 17), 16),
    32: PublishedRow('Case 1', (19,), (17,), 31),
    33: PublishedRow('Case N', (17, 33), (17, 33), 32),
    34: PublishedRow('Case 2', (33,), (33,), 33),
    40: PublishedRow('Case 2', (33,), (33,), 39),
}


def _is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


def _require_order(n: int) -> None:
    if n < 3:
        raise DomainError(f"DNP analysis needs n >= 3, got {n}")


def same_family(a: CaseLabel, b: CaseLabel) -> bool:
    """Case 1 and Case 2 share a single formula once reconciled"""
    return (a is CaseLabel.CASE_N) == (b is CaseLabel.CASE_N)


def classify_case(n: int) -> CaseLabel:
    """Case N if n = 2^m + 1 (m >= 1), Case 1 if n is a power of two, else Case 2"""
    _require_order(n)
    if _is_power_of_two(n - 1):
        return CaseLabel.CASE_N
    if _is_power_of_two(n):
        return CaseLabel.CASE_1
    return CaseLabel.CASE_2


def dnp_formula(n: int) -> Tuple[int, ...]:
    """
    DNP indices from the closed-form rules (all logarithms base 2).

    Case N (n = 2^m + 1): {2^(m-1) + 1, 2^m + 1}, which is {2, 3} for n = 3.
    Otherwise: {2^(ceil(log n) - 1) + 1}; for Case 2 this equals 2^floor(log n) + 1.
    """
    label = classify_case(n)
    if label is CaseLabel.CASE_N:
        m = (n - 1).bit_length() - 1
        return ((1 << (m - 1)) + 1, (1 << m) + 1)
    ceil_log = (n - 1).bit_length()
    return ((1 << (ceil_log - 1)) + 1,)


def literal_formula(n: int) -> Tuple[int, ...]:
    """
    The printed formulas taken literally.

    Only Case 2 differs from dnp_formula: 2^ceil(log n) + 1 exceeds n.
    """
    label = classify_case(n)
    if label is CaseLabel.CASE_2:
        return ((1 << (n - 1).bit_length()) + 1,)
    return dnp_formula(n)


def dnp_window(i: int) -> Tuple[int, int]:
    """
    Orders n for which vertex i = 2^m + 1 is a DNP: 2^m + 1 <= n <= 2^(m+1) + 1.

    m = 0 gives vertex 2, a DNP of PG(3) only.
    """
    x = i - 1
    if not _is_power_of_two(x):
        raise DomainError(f"vertex {i} is not of the form 2^m + 1")
    return i, 2 * x + 1


def dnp_bruteforce(g: Graph) -> Tuple[int, ...]:
    """Every vertex other than v1 whose degree equals v1's full degree n - 1"""
    if g.vertex_count < 3:
        raise DomainError(f"DNP analysis needs n >= 3, got {g.vertex_count}")
    return tuple(v for v in universal_vertices(g) if v != 1)


@dataclass
class DnpReport:
    """DNP analysis of one order"""
    n: int
    label: CaseLabel
    formula_indices: Tuple[int, ...]
    brute_indices: Tuple[int, ...]
    degree: int
    paper_discrepancy: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def agrees(self) -> bool:
        return self.formula_indices == self.brute_indices

    def to_dict(self) -> Dict[str, Any]:
        """Convert to JSON-serializable dictionary"""
        return {
            'n': self.n,
            'label': self.label.value,
            'formula_indices': list(self.formula_indices),
            'brute_indices': list(self.brute_indices),
            'degree': self.degree,
            'agrees': self.agrees,
            'paper_discrepancy': list(self.paper_discrepancy),
            'notes': list(self.notes),
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _format_indices(indices: Iterable[int]) -> str:
    return ', '.join(str(i) for i in indices)


def _compare_with_published(report: DnpReport, row: PublishedRow) -> None:
    printed = CaseLabel(row.label)
    if not same_family(printed, report.label):
        report.paper_discrepancy.append(
            f"case label: printed {row.label}, order {report.n} is {report.label.value}")
    elif printed is not report.label:
        report.notes.append(
            f"printed {row.label}; {report.label.value} uses the same reconciled formula")
    if row.index != report.brute_indices:
        report.paper_discrepancy.append(
            f"index column: printed {_format_indices(row.index)}, "
            f"oracle finds {_format_indices(report.brute_indices)}")
    if row.dnp != report.brute_indices:
        report.paper_discrepancy.append(
            f"DNP column: printed V{', V'.join(map(str, row.dnp))}, "
            f"oracle finds {_format_indices(report.brute_indices)}")
    if row.degree != report.degree:
        report.paper_discrepancy.append(f"degree: printed {row.degree}, computed {report.degree}")


def dnp_report(n: int, g: Optional[Graph] = None) -> DnpReport:
    """
    Combine classification, formula, oracle and degree for one order.

    Args:
        n: Order of the Pascal graph
        g: PG(n) when already built (generated otherwise)
    """
    label = classify_case(n)
    if g is None:
        g = from_matrix(generate(n))
    formula = dnp_formula(n)
    brute = dnp_bruteforce(g)
    degree = g.degree(brute[0]) if brute else g.degree(1)
    report = DnpReport(n=n, label=label, formula_indices=formula,
                       brute_indices=brute, degree=degree)

    literal = literal_formula(n)
    if literal != formula:
        report.notes.append(
            f"printed {label.value} formula gives {_format_indices(literal)} > n; "
            f"reconciled to {_format_indices(formula)}")
    row = PUBLISHED_TABLE1.get(n)
    if row is not None:
        _compare_with_published(report, row)
    return report


def table1_report(n_values: Sequence[int] = DEFAULT_TABLE_ORDERS,
                  verbose: bool = False) -> List[DnpReport]:
    """
    One DnpReport per order, built from a single generated matrix.

    PG(k) is the leading k x k block of PG(max n), so only the largest order
    is generated.
    """
    for n in n_values:
        _require_order(n)
    if not n_values:
        return []
    largest = generate(max(n_values))
    reports = []
    for n in n_values:
        report = dnp_report(n, from_matrix(leading_submatrix(largest, n)))
        if verbose:
            print(f"[DNP] n={n}: {report.label.value} formula={report.formula_indices} "
                  f"oracle={report.brute_indices}", file=sys.stderr)
        reports.append(report)
    return reports


def verify_dnp_range(lo: int, hi: int, verbose: bool = False) -> List[int]:
    """
    Compare dnp_formula with dnp_bruteforce for every order in lo..hi.

    Returns:
        Orders where the two disagree (empty when the formula holds throughout)
    """
    _require_order(lo)
    if hi < lo:
        raise DomainError(f"empty range {lo}..{hi}")
    largest = generate(hi)
    mismatches = []
    for n in range(lo, hi + 1):
        g = from_matrix(leading_submatrix(largest, n))
        if dnp_formula(n) != dnp_bruteforce(g):
            mismatches.append(n)
            if verbose:
                print(f"[DNP] mismatch at n={n}", file=sys.stderr)
    return mismatches
