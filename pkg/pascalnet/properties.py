"""
Property Suite Module
Runs one executable check per published Pascal graph property and
collects pass/fail/witness records
"""

import json
import sys
from dataclasses import asdict, dataclass
from typing import Any, Callable, Dict, Iterable, List, Optional

from .config import load_settings
from .errors import DomainError
from . import graph as ga
from .matrix import (PascalMatrix, determinant, edge_bound, edge_count, generate,
                     gf2_determinant, invariant_violations, leading_submatrix,
                     literal_edge_bound)
from .planarity import is_planar
from .triangle import odd_count_prefix

PROPERTY_IDS = ('i', 'ii', 'iii', 'iv', 'v', 'vi', 'vii', 'viii', 'ix', 'x', 'xi', 'xii', 'xiii', 'xiv')

PROPERTY_TITLES = {
    'i': 'PG(n) is a subgraph of PG(n+1)',
    'ii': 'planar exactly for n <= 7',
    'iii': 'v1 universal; V_i adjacent to V_(i+1)',
    'iv': 'contains a star tree',
    'v': 'Hamiltonian circuit [1,2,...,n,1]',
    'vi': 'contains a wheel minus an edge',
    'vii': 'V_k (k = 2^m+1) adjacent to all V_i up to 2^(m+1)+1',
    'viii': '2-connected for n >= 3',
    'ix': 'no two even vertices adjacent',
    'x': 'two edge-disjoint paths of length <= 2',
    'xi': 'long edges (i > j) into even V_j come from odd V_i adjacent to V_(j-1)',
    'xii': 'det(PM(n)) = 0 for even n >= 4',
    'xiii': 'edge count = odd entries, <= (n-1)^log2(3)',
    'xiv': 'det(PM(n)) is even for n >= 3',
}

PLANAR_LIMIT = 7


@dataclass
class PropertyReport:
    """Outcome of one property check at one order"""
    property_id: str
    n: int
    passed: bool
    witness: Optional[str] = None
    skipped: bool = False
    note: Optional[str] = None

    def __post_init__(self):
        if self.passed == (self.witness is not None):
            raise ValueError("witness must be present exactly when the check failed")

    @property
    def title(self) -> str:
        return PROPERTY_TITLES.get(self.property_id, '')

    @property
    def status(self) -> str:
        if self.skipped:
            return 'SKIP'
        return 'PASS' if self.passed else 'FAIL'

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _report(pid: str, n: int, witness: Optional[str], note: Optional[str] = None) -> PropertyReport:
    return PropertyReport(property_id=pid, n=n, passed=witness is None, witness=witness, note=note)


def _skip(pid: str, n: int, reason: str) -> PropertyReport:
    return PropertyReport(property_id=pid, n=n, passed=True, skipped=True, note=reason)


def _nesting_witness(pm: PascalMatrix, max_order: int) -> Optional[str]:
    problems = invariant_violations(pm)
    if problems:
        return problems[0]
    if pm.order < max_order:
        larger = leading_submatrix(generate(pm.order + 1, max_order=max_order), pm.order)
        for i in range(1, pm.order + 1):
            if larger.row_bits(i) != pm.row_bits(i):
                return f"row {i} of PM({pm.order + 1}) differs from PM({pm.order})"
    return None


def _planarity_report(g: ga.Graph, n: int, cap: int, verbose: bool) -> PropertyReport:
    expected = n <= PLANAR_LIMIT
    if n <= cap:
        actual = is_planar(g, verbose=verbose)
        witness = None if actual == expected else f"is_planar returned {actual}, expected {expected}"
        return _report('ii', n, witness)
    m = g.edge_count
    if m > 3 * n - 6:
        # the edge count alone proves non-planarity
        witness = None if not expected else f"{m} edges exceed 3n-6"
        return _report('ii', n, witness)
    return _skip('ii', n, f"order above planarity cap {cap}")


def _power_hub_report(g: ga.Graph, n: int) -> PropertyReport:
    hubs = [(1 << m) + 1 for m in range(1, n.bit_length() + 1) if (1 << m) + 1 <= n]
    if not hubs:
        return _skip('vii', n, "no vertex of the form 2^m+1")
    witness = None
    unqualified_failures = []
    for k in hubs:
        witness = witness or ga.power_hub_witness(g, k, qualified=True)
        failure = ga.power_hub_witness(g, k, qualified=False)
        if failure:
            unqualified_failures.append(failure)
    note = None
    if unqualified_failures:
        note = f"unqualified form fails: {unqualified_failures[0]}"
    return _report('vii', n, witness, note)


def _even_parity_report(g: ga.Graph, n: int) -> PropertyReport:
    witness = ga.even_neighbor_parity_witness(g, qualified=True)
    failure = ga.even_neighbor_parity_witness(g, qualified=False)
    note = f"unqualified form fails: {failure}" if failure else None
    return _report('xi', n, witness, note)


def _edge_count_report(pm: PascalMatrix, n: int) -> PropertyReport:
    edges = edge_count(pm)
    expected = odd_count_prefix(n - 1)
    bound = edge_bound(n)
    witness = None
    if edges != expected:
        witness = f"{edges} edges but {expected} odd triangle entries"
    elif edges > bound:
        witness = f"{edges} edges exceed floor((n-1)^log2(3)) = {bound}"
    note = None
    literal = literal_edge_bound(n)
    if edges > literal:
        note = f"product reading floor((n-1)*log2(3)) = {literal} is exceeded by {edges} edges"
    return _report('xiii', n, witness, note)


def run_property_suite(n: int, planarity_cap: Optional[int] = None, max_order: Optional[int] = None,
                       only: Optional[Iterable[str]] = None,
                       verbose: bool = False) -> List[PropertyReport]:
    """
    Evaluate the properties on PG(n).

    Args:
        n: Order of the Pascal graph
        planarity_cap: Largest order given the full planarity test (defaults to settings)
        max_order: Capacity limit (defaults to settings)
        only: Property ids to evaluate (default: all of i..xiv)
        verbose: Print debug information to stderr

    Returns:
        One PropertyReport per selected property, in order i..xiv
    """
    settings = load_settings()
    cap = settings.planarity_cap if planarity_cap is None else planarity_cap
    limit = settings.max_order if max_order is None else max_order
    wanted = set(PROPERTY_IDS if only is None else only)
    unknown = wanted - set(PROPERTY_IDS)
    if unknown:
        raise DomainError(f"unknown property id(s): {', '.join(sorted(unknown))}")

    pm = generate(n, max_order=limit)
    g = ga.from_matrix(pm)
    if verbose:
        print(f"[Properties] PG({n}): {g.edge_count} edges", file=sys.stderr)

    # determinant is cubic in n; computed at most once and only when asked for
    det_cache: List[int] = []

    def det() -> int:
        if not det_cache:
            det_cache.append(determinant(pm))
        return det_cache[0]

    def needs(minimum: int, pid: str, check: Callable[[], Optional[str]]) -> PropertyReport:
        if n < minimum:
            return _skip(pid, n, f"needs n >= {minimum}")
        return _report(pid, n, check())

    def zero_det() -> PropertyReport:
        if n < 4 or n % 2:
            return _skip('xii', n, "applies to even n >= 4")
        value = det()
        return _report('xii', n, None if value == 0 else f"det(PM({n})) = {value}")

    def even_det() -> Optional[str]:
        value = det()
        if value % 2:
            return f"det(PM({n})) = {value} is odd"
        if gf2_determinant(pm) != 0:
            return f"elimination over GF(2) disagrees with det(PM({n})) = {value}"
        return None

    checks: Dict[str, Callable[[], PropertyReport]] = {
        'i': lambda: _report('i', n, _nesting_witness(pm, limit)),
        'ii': lambda: _planarity_report(g, n, cap, verbose),
        'iii': lambda: _report('iii', n, ga.star_witness(g) or ga.consecutive_adjacency_witness(g)),
        'iv': lambda: _report('iv', n, ga.star_witness(g)),
        'v': lambda: needs(3, 'v', lambda: ga.sequential_hamiltonian_witness(g)),
        'vi': lambda: needs(4, 'vi', lambda: ga.wheel_minus_edge_witness(g)),
        'vii': lambda: _power_hub_report(g, n),
        'viii': lambda: needs(3, 'viii', lambda: ga.biconnectivity_witness(g)),
        'ix': lambda: _report('ix', n, ga.even_independence_witness(g)),
        'x': lambda: needs(3, 'x', lambda: ga.short_paths_witness(g)),
        'xi': lambda: _even_parity_report(g, n),
        'xii': zero_det,
        'xiii': lambda: _edge_count_report(pm, n),
        'xiv': lambda: needs(3, 'xiv', even_det),
    }
    reports = [checks[pid]() for pid in PROPERTY_IDS if pid in wanted]

    if verbose:
        failed = [r.property_id for r in reports if not r.passed]
        print(f"[Properties] PG({n}): failed {failed or 'none'}", file=sys.stderr)
    return reports


def topology_summary(g: ga.Graph) -> Dict[str, Any]:
    """Degree, diameter and hop figures used to judge a topology"""
    if g.vertex_count == 0:
        raise DomainError("summary of an empty graph")
    degree_list = [g.degree(v) for v in g.vertices()]
    average = ga.mean_hops(ga.hop_histogram(g))
    diam = ga.diameter(g)
    return {
        'vertices': g.vertex_count,
        'edges': g.edge_count,
        'min_degree': min(degree_list),
        'max_degree': max(degree_list),
        'diameter': diam if diam != ga.INFINITY else 'inf',
        'avg_hops': f"{average.numerator}/{average.denominator}",
        'universal_vertices': ga.universal_vertices(g),
    }


def hop_parity_breakdown(g: ga.Graph) -> Dict[str, int]:
    """Distance-2 pairs grouped by the parity of their indices"""
    counts = {'even-even': 0, 'odd-odd': 0, 'mixed': 0}
    for u in g.vertices():
        levels = ga.bfs_levels(g, u)
        if len(levels) < 3:
            continue
        for v in ga.iter_bits(levels[2] >> u):
            w = u + v
            if u % 2 == 0 and w % 2 == 0:
                counts['even-even'] += 1
            elif u % 2 and w % 2:
                counts['odd-odd'] += 1
            else:
                counts['mixed'] += 1
    return counts
