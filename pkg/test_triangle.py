#!/usr/bin/env python3
"""
Tests for Pascal's triangle mod 2 and its number-theoretic oracles
"""

import pytest
from hypothesis import given, strategies as st

from pascalnet.errors import CapacityError, DomainError
from pascalnet.triangle import (binomial_parity, odd_count_prefix, popcount, triangle_row,
                                triangle_rows)


def test_first_rows():
    assert triangle_row(0).bits == (1,)
    assert triangle_row(3).bits == (1, 1, 1, 1)
    assert triangle_row(4).bits == (1, 0, 0, 0, 1)
    assert triangle_row(6).bits == (1, 0, 1, 0, 1, 0, 1)


def test_row_mask_and_odd_count():
    row = triangle_row(5)
    assert row.bits == (1, 1, 0, 0, 1, 1)
    assert row.mask == 0b110011
    assert row.odd_count == 4
    assert len(row) == 6


def test_rows_are_consecutive():
    rows = list(triangle_rows(9))
    assert [r.row_index for r in rows] == list(range(9))
    assert rows[-1].bits == triangle_row(8).bits


def test_recurrence_matches_lucas_up_to_512():
    for row in triangle_rows(513):
        r = row.row_index
        assert row.bits[0] == row.bits[r] == 1
        assert row.bits == row.bits[::-1]
        assert row.bits == tuple(binomial_parity(r, j) for j in range(r + 1))


@given(st.integers(min_value=0, max_value=300))
def test_row_holds_power_of_two_odd_entries(r):
    assert triangle_row(r).odd_count == 2 ** popcount(r)


def test_binomial_parity_examples():
    assert binomial_parity(4, 2) == 0
    assert binomial_parity(5, 1) == 1
    assert binomial_parity(7, 3) == 1
    assert binomial_parity(6, 3) == 0
    assert binomial_parity(8, 4) == 0
    assert binomial_parity(5, 0) == 1


def test_power_of_two_rows():
    rows = list(triangle_rows(513))
    for k in range(10):
        assert all(rows[2 ** k - 1].bits)
        assert rows[2 ** k].odd_count == 2
        assert rows[2 ** k].bits[0] == rows[2 ** k].bits[-1] == 1


def test_binomial_parity_rejects_column_beyond_row():
    with pytest.raises(DomainError):
        binomial_parity(3, 4)
    with pytest.raises(DomainError):
        binomial_parity(-1, 0)


def test_odd_count_prefix():
    assert odd_count_prefix(0) == 0
    assert odd_count_prefix(1) == 1
    assert odd_count_prefix(4) == 9
    assert odd_count_prefix(8) == 27
    for k in range(8):
        assert odd_count_prefix(2 ** k) == 3 ** k


def test_negative_row_is_a_domain_error():
    with pytest.raises(DomainError):
        triangle_row(-1)


def test_row_beyond_capacity(monkeypatch):
    with pytest.raises(CapacityError):
        triangle_row(11, max_order=10)
    monkeypatch.setenv('PASCALNET_MAX_ORDER', '8')
    with pytest.raises(CapacityError):
        triangle_row(9)
    assert triangle_row(8).bits[0] == 1
