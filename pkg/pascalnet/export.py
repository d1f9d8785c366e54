"""
Export Module
JSON, CSV and DOT renderings of matrices, graphs and reports
"""

import csv
import io
import json
from typing import Any, Iterable, List, Sequence

from .dnp import DnpReport
from .graph import INFINITY, Graph
from .properties import PropertyReport
from .resilience import ResilienceReport

DNP_CSV_HEADER = ('n', 'case', 'formula_indices', 'brute_indices', 'degree', 'agrees',
                  'paper_discrepancy')
SWEEP_CSV_HEADER = ('trial', 'failed', 'connected', 'diameter', 'avg_hops_num', 'avg_hops_den',
                    'hub_used')
PROPERTY_CSV_HEADER = ('n', 'property', 'status', 'witness', 'note')


def dumps(data: Any) -> str:
    """JSON text with a trailing newline"""
    return json.dumps(data, indent=2) + '\n'


def _csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _join(values: Iterable[Any]) -> str:
    return ';'.join(str(v) for v in values)


def _flag(value: bool) -> str:
    return 'true' if value else 'false'


def dnp_csv(reports: Iterable[DnpReport]) -> str:
    return _csv(DNP_CSV_HEADER, (
        (r.n, r.label.value, _join(r.formula_indices), _join(r.brute_indices), r.degree,
         _flag(r.agrees), _join(r.paper_discrepancy))
        for r in reports
    ))


def sweep_csv(reports: Iterable[ResilienceReport]) -> str:
    return _csv(SWEEP_CSV_HEADER, (
        (r.trial, _join(r.failed), _flag(r.connected),
         'inf' if r.diameter_after == INFINITY else r.diameter_after,
         r.avg_hops.numerator, r.avg_hops.denominator,
         '' if r.hub_used is None else r.hub_used)
        for r in reports
    ))


def property_csv(reports: Iterable[PropertyReport]) -> str:
    return _csv(PROPERTY_CSV_HEADER, (
        (r.n, r.property_id, r.status, r.witness or '', r.note or '')
        for r in reports
    ))


def to_dot(g: Graph, name: str = '') -> str:
    """Undirected DOT graph with vertices named v1..vn"""
    title = name or f"PG{g.order}"
    lines: List[str] = [f'graph "{title}" {{']
    lines.extend(f"  v{v};" for v in g.vertices())
    lines.extend(f"  v{u} -- v{v};" for u, v in g.edges())
    lines.append('}')
    return '\n'.join(lines) + '\n'


def to_edge_csv(g: Graph) -> str:
    return _csv(('u', 'v'), g.edges())
