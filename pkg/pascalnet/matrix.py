"""
Pascal Matrix Module
Builds PM(n) from Pascal's triangle mod 2 and provides exact determinant,
edge-count and nesting operations
"""

import json
from dataclasses import dataclass
from decimal import Decimal, localcontext
from typing import Any, Dict, List, Optional, Tuple

from .config import resolve_max_order
from .errors import CapacityError, DomainError
from .triangle import popcount, triangle_rows

# Digits used for the (n-1)^(log2 3) bound; far more than any order we build needs
_BOUND_PRECISION = 60


@dataclass(frozen=True)
class PascalMatrix:
    """
    Symmetric binary matrix of order n, stored as one int per row.

    Bit (j - 1) of rows[i - 1] holds pm[i][j]; indices are 1-based at every
    public boundary.
    """
    order: int
    rows: Tuple[int, ...]

    def entry(self, i: int, j: int) -> int:
        """pm[i][j] for 1-based i, j"""
        if not (1 <= i <= self.order and 1 <= j <= self.order):
            raise DomainError(f"entry ({i}, {j}) outside a matrix of order {self.order}")
        return (self.rows[i - 1] >> (j - 1)) & 1

    def row_bits(self, i: int) -> Tuple[int, ...]:
        if not 1 <= i <= self.order:
            raise DomainError(f"row {i} outside a matrix of order {self.order}")
        mask = self.rows[i - 1]
        return tuple((mask >> j) & 1 for j in range(self.order))

    def as_lists(self) -> List[List[int]]:
        return [list(self.row_bits(i)) for i in range(1, self.order + 1)]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to JSON-serializable dictionary"""
        return {'order': self.order, 'rows': self.as_lists()}

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_text(self) -> str:
        """Plain 0/1 grid, space separated, one row per line (golden format)"""
        return ''.join(' '.join(str(bit) for bit in row) + '\n' for row in self.as_lists())


def generate(n: int, max_order: Optional[int] = None) -> PascalMatrix:
    """
    Build the Pascal Matrix PM(n).

    The lower triangle is filled from triangle rows 0..n-2 (row k of the
    matrix takes triangle row k-2 as its prefix), the upper triangle is
    its mirror, and the diagonal stays zero.

    Args:
        n: Matrix order
        max_order: Capacity limit (defaults to the configured maximum)

    Raises:
        DomainError: n < 1
        CapacityError: n exceeds the configured maximum
    """
    if n < 1:
        raise DomainError(f"matrix order must be >= 1, got {n}")
    limit = resolve_max_order(max_order)
    if n > limit:
        raise CapacityError(n, limit)

    rows = [0] * n
    for triangle in triangle_rows(n - 1, max_order=limit):
        k = triangle.row_index + 2
        for j, bit in enumerate(triangle.bits):
            if bit:
                # lower entry pm[k][j+1] and its mirror pm[j+1][k]
                rows[k - 1] |= 1 << j
                rows[j] |= 1 << (k - 1)
    return PascalMatrix(order=n, rows=tuple(rows))


def leading_submatrix(pm: PascalMatrix, k: int) -> PascalMatrix:
    """The k x k leading principal submatrix of pm"""
    if not 1 <= k <= pm.order:
        raise DomainError(f"submatrix order {k} outside 1..{pm.order}")
    keep = (1 << k) - 1
    return PascalMatrix(order=k, rows=tuple(row & keep for row in pm.rows[:k]))


def from_text(text: str) -> PascalMatrix:
    """Parse the plain 0/1 grid written by PascalMatrix.to_text"""
    lines = [line.split() for line in text.splitlines() if line.strip()]
    order = len(lines)
    if order == 0:
        raise DomainError("empty matrix text")
    rows = []
    for i, cells in enumerate(lines, 1):
        if len(cells) != order:
            raise DomainError(f"row {i} has {len(cells)} entries, expected {order}")
        mask = 0
        for j, cell in enumerate(cells):
            if cell not in ('0', '1'):
                raise DomainError(f"row {i} holds non-binary entry {cell!r}")
            if cell == '1':
                mask |= 1 << j
        rows.append(mask)
    return PascalMatrix(order=order, rows=tuple(rows))


def invariant_violations(pm: PascalMatrix) -> List[str]:
    """
    Check the definitional invariants of a Pascal matrix.

    Returns:
        Human-readable violations; empty when pm is a valid PM(order)
    """
    problems = []
    n = pm.order
    for i in range(1, n + 1):
        if pm.entry(i, i):
            problems.append(f"diagonal entry ({i}, {i}) is 1")
        for j in range(i + 1, n + 1):
            if pm.entry(i, j) != pm.entry(j, i):
                problems.append(f"entries ({i}, {j}) and ({j}, {i}) differ")
    for triangle in triangle_rows(n - 1):
        k = triangle.row_index + 2
        prefix = pm.row_bits(k)[:k - 1]
        if prefix != triangle.bits:
            problems.append(f"row {k} prefix differs from triangle row {k - 2}")
    return problems


def degrees(pm: PascalMatrix) -> List[int]:
    """Row sums, index 0 holding the degree of vertex 1"""
    return [popcount(row) for row in pm.rows]


def edge_count(pm: PascalMatrix) -> int:
    """Number of 1s strictly above the diagonal"""
    return sum(popcount(row >> (i + 1)) for i, row in enumerate(pm.rows))


def determinant(pm: PascalMatrix) -> int:
    """
    Exact integer determinant by fraction-free (Bareiss) elimination.

    Every division in the elimination is exact, so intermediate values stay
    integral; no floating point is involved.
    """
    n = pm.order
    a = pm.as_lists()
    sign = 1
    previous = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
        previous = a[k][k]
    return sign * a[n - 1][n - 1]


def gf2_determinant(pm: PascalMatrix) -> int:
    """Determinant over the field of two elements (the parity of the integer determinant)"""
    rows = list(pm.rows)
    n = pm.order
    for col in range(n):
        bit = 1 << col
        pivot = next((r for r in range(col, n) if rows[r] & bit), None)
        if pivot is None:
            return 0
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for r in range(col + 1, n):
            if rows[r] & bit:
                rows[r] ^= rows[col]
    return 1


def _log2_3() -> Decimal:
    return Decimal(3).ln() / Decimal(2).ln()


def edge_bound(n: int) -> int:
    """
    Exponent form of the edge bound, floor((n - 1) ** log2(3)).

    Exact when n - 1 is a power of two (the bound is then 3^k); otherwise the
    value is irrational and is evaluated with high-precision decimals.
    """
    if n < 1:
        raise DomainError(f"order must be >= 1, got {n}")
    x = n - 1
    if x == 0:
        return 0
    if x & (x - 1) == 0:
        return 3 ** (x.bit_length() - 1)
    with localcontext() as ctx:
        ctx.prec = _BOUND_PRECISION
        return int((Decimal(x).ln() * _log2_3()).exp())


def literal_edge_bound(n: int) -> int:
    """floor((n - 1) * log2(3)), the product reading of the printed bound"""
    if n < 1:
        raise DomainError(f"order must be >= 1, got {n}")
    with localcontext() as ctx:
        ctx.prec = _BOUND_PRECISION
        return int(Decimal(n - 1) * _log2_3())
