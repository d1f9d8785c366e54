#!/usr/bin/env python3
"""
Tests for the property suite, topology summary and hop parity breakdown
"""

import pytest

from pascalnet.errors import DomainError
from pascalnet.graph import from_matrix
from pascalnet.matrix import generate
from pascalnet.properties import (PROPERTY_IDS, PropertyReport, hop_parity_breakdown,
                                  run_property_suite, topology_summary)

STRUCTURAL = ('i', 'iii', 'iv', 'v', 'vi', 'viii', 'ix', 'x', 'xi')


def by_id(reports):
    return {r.property_id: r for r in reports}


def test_full_suite_on_pg5():
    reports = run_property_suite(5)
    assert [r.property_id for r in reports] == list(PROPERTY_IDS)
    assert all(r.passed for r in reports)
    assert all(r.witness is None for r in reports)
    table = by_id(reports)
    assert table['xii'].status == 'SKIP'
    assert table['ii'].status == 'PASS'
    assert table['xiii'].note.startswith('product reading')


def test_structural_properties_up_to_128():
    for n in range(3, 129):
        for report in run_property_suite(n, only=STRUCTURAL):
            assert report.passed, (n, report.property_id, report.witness)


def test_determinant_properties_up_to_24():
    for n in range(3, 25):
        table = by_id(run_property_suite(n, only=('xii', 'xiv')))
        assert table['xiv'].passed
        assert table['xii'].passed
        assert table['xii'].skipped == (n < 4 or n % 2 == 1)


def test_planarity_property():
    for n in (3, 7, 8, 16):
        assert by_id(run_property_suite(n, only=('ii',)))['ii'].status == 'PASS'
    # above the cap the edge count still decides
    assert by_id(run_property_suite(40, only=('ii',)))['ii'].status == 'PASS'


def test_planarity_cap_from_environment(monkeypatch):
    monkeypatch.setenv('PASCALNET_PLANARITY_CAP', '4')
    assert by_id(run_property_suite(6, only=('ii',)))['ii'].status == 'SKIP'
    assert by_id(run_property_suite(8, only=('ii',)))['ii'].status == 'PASS'


def test_power_hub_notes_unqualified_failure():
    report = by_id(run_property_suite(10, only=('vii',)))['vii']
    assert report.passed
    assert report.note == "unqualified form fails: vertex 3 is not adjacent to vertex 6"
    assert by_id(run_property_suite(5, only=('vii',)))['vii'].note is None


def test_even_parity_notes_unqualified_failure():
    report = by_id(run_property_suite(8, only=('xi',)))['xi']
    assert report.passed
    assert "(3, 7) missing" in report.note
    assert by_id(run_property_suite(7, only=('xi',)))['xi'].note is None


def test_edge_count_property_up_to_64():
    for n in range(2, 65):
        assert by_id(run_property_suite(n, only=('xiii',)))['xiii'].passed


def test_small_orders_skip_what_does_not_apply():
    table = by_id(run_property_suite(2))
    assert table['v'].skipped
    assert table['vi'].skipped
    assert table['viii'].skipped
    assert table['vii'].skipped
    assert table['iv'].passed


def test_unknown_property_id():
    with pytest.raises(DomainError):
        run_property_suite(5, only=('xv',))


def test_report_requires_witness_exactly_on_failure():
    with pytest.raises(ValueError):
        PropertyReport(property_id='ix', n=5, passed=False)
    with pytest.raises(ValueError):
        PropertyReport(property_id='ix', n=5, passed=True, witness='edge (2, 4)')
    failed = PropertyReport(property_id='ix', n=5, passed=False, witness='edge (2, 4)')
    assert failed.status == 'FAIL'
    assert failed.to_dict() == {'property_id': 'ix', 'n': 5, 'passed': False,
                                'witness': 'edge (2, 4)', 'skipped': False, 'note': None}


def test_topology_summary_of_pg5():
    assert topology_summary(from_matrix(generate(5))) == {
        'vertices': 5,
        'edges': 9,
        'min_degree': 3,
        'max_degree': 4,
        'diameter': 2,
        'avg_hops': '11/10',
        'universal_vertices': [1, 3, 5],
    }


def test_odd_pairs_also_need_two_hops():
    g = from_matrix(generate(7))
    assert not g.has_edge(3, 7)
    counts = hop_parity_breakdown(g)
    assert counts['odd-odd'] >= 1
    assert hop_parity_breakdown(from_matrix(generate(5))) == {'even-even': 1, 'odd-odd': 0, 'mixed': 0}
