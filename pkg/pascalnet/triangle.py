"""
Pascal Triangle Module
Rows of Pascal's triangle reduced modulo 2, with number-theoretic oracles
used to cross-check matrix construction
"""

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from .config import resolve_max_order
from .errors import CapacityError, DomainError


def popcount(value: int) -> int:
    """Number of 1 bits in a nonnegative integer"""
    return bin(value).count('1')


@dataclass(frozen=True)
class BitRow:
    """One row of Pascal's triangle mod 2 (row_index is 0-based)"""
    row_index: int
    bits: Tuple[int, ...]

    @property
    def mask(self) -> int:
        """Bits packed into an int, bit j holding bits[j]"""
        value = 0
        for j, bit in enumerate(self.bits):
            if bit:
                value |= 1 << j
        return value

    @property
    def odd_count(self) -> int:
        return sum(self.bits)

    def __len__(self) -> int:
        return len(self.bits)


def _next_bits(bits: Tuple[int, ...]) -> Tuple[int, ...]:
    # Each entry is the number above-left plus the number above-right,
    # with 0 substituted where either is missing; all of it mod 2.
    width = len(bits) + 1
    return tuple(
        ((bits[j - 1] if j >= 1 else 0) + (bits[j] if j < len(bits) else 0)) % 2
        for j in range(width)
    )


def _check_row_index(r: int, max_order: Optional[int]) -> None:
    if r < 0:
        raise DomainError(f"triangle row index must be >= 0, got {r}")
    limit = resolve_max_order(max_order)
    if r > limit:
        raise CapacityError(r, limit)


def triangle_rows(count: int, max_order: Optional[int] = None) -> Iterator[BitRow]:
    """
    Yield rows 0..count-1 of Pascal's triangle mod 2, each built from the previous one.

    Args:
        count: Number of rows to produce
        max_order: Capacity limit (defaults to the configured maximum)
    """
    if count < 0:
        raise DomainError(f"row count must be >= 0, got {count}")
    if count:
        _check_row_index(count - 1, max_order)

    bits: Tuple[int, ...] = (1,)
    for r in range(count):
        if r:
            bits = _next_bits(bits)
        yield BitRow(row_index=r, bits=bits)


def triangle_row(r: int, max_order: Optional[int] = None) -> BitRow:
    """
    Parity of the binomial coefficients C(r, 0..r).

    Computed by the add-above-left/above-right recurrence carried out in {0, 1};
    no binomial values are ever formed.

    Args:
        r: 0-based row index
        max_order: Capacity limit (defaults to the configured maximum)

    Returns:
        BitRow for row r

    Raises:
        DomainError: r is negative
        CapacityError: r exceeds the configured maximum
    """
    _check_row_index(r, max_order)
    return deque(triangle_rows(r + 1, max_order=max_order), maxlen=1)[0]


def binomial_parity(r: int, j: int) -> int:
    """
    Parity of C(r, j) by Lucas' theorem: odd iff every binary digit of j
    is at most the matching digit of r.

    Raises:
        DomainError: j outside 0..r
    """
    if r < 0 or j < 0:
        raise DomainError(f"binomial_parity needs nonnegative arguments, got ({r}, {j})")
    if j > r:
        raise DomainError(f"column {j} lies beyond row {r}")
    return 1 if (j & r) == j else 0


def odd_count_prefix(m: int) -> int:
    """
    Total number of odd entries in triangle rows 0..m-1.

    Row r holds 2^popcount(r) odd entries, so the sum is also the edge
    count of PG(m + 1).
    """
    if m < 0:
        raise DomainError(f"row count must be >= 0, got {m}")
    return sum(1 << popcount(r) for r in range(m))
