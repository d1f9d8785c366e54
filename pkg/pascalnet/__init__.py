"""
Pascal Network Module
Pascal matrices and Pascal graphs as an interconnection topology:
generation, property checks, Dependable Nodes and failure resilience.
"""

from .dnp import CaseLabel, DnpReport, dnp_bruteforce, dnp_formula, dnp_report, table1_report
from .errors import (CapacityError, ConfigError, DomainError, PascalNetError, UnreachableError,
                     UsageError)
from .formatter import ReportFormatter
from .graph import Graph, from_matrix
from .matrix import PascalMatrix, generate
from .properties import PropertyReport, run_property_suite
from .resilience import FailureScenario, ResilienceReport, failure_sweep

__version__ = '1.0.0'


def pascal_graph(n, max_order=None):
    """
    Build the Pascal graph PG(n).

    Args:
        n (int): Order of the graph (>= 1)
        max_order (int): Optional limit overriding PASCALNET_MAX_ORDER

    Returns:
        Graph: PG(n) with vertices 1..n
    """
    return from_matrix(generate(n, max_order=max_order))


def format_reports(reports, n=None, use_color=True):
    """
    Format property or DNP reports for display.

    Args:
        reports (list): PropertyReport objects for one order, or DnpReport objects
        n (int): Order, required for property reports
        use_color (bool): If True, use colored output (for terminal)

    Returns:
        str: Formatted string ready for display
    """
    formatter = ReportFormatter(use_color=use_color)
    if reports and isinstance(reports[0], DnpReport):
        return formatter.format_table1(reports)
    return formatter.format_properties(n, reports)


__all__ = [
    'pascal_graph', 'format_reports',
    'PascalMatrix', 'generate', 'Graph', 'from_matrix',
    'PropertyReport', 'run_property_suite',
    'CaseLabel', 'DnpReport', 'dnp_formula', 'dnp_bruteforce', 'dnp_report', 'table1_report',
    'FailureScenario', 'ResilienceReport', 'failure_sweep',
    'ReportFormatter',
    'PascalNetError', 'DomainError', 'CapacityError', 'UnreachableError', 'UsageError', 'ConfigError',
]
