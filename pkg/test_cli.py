#!/usr/bin/env python3
"""
End-to-end tests of the pascalnet.py command-line tool
"""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent
SCRIPT = ROOT / 'pascalnet.py'

PM5_TEXT = (
    "0 1 1 1 1\n"
    "1 0 1 0 1\n"
    "1 1 0 1 1\n"
    "1 0 1 0 1\n"
    "1 1 1 1 0\n"
)


def run_cli(*args, env=None):
    environment = dict(os.environ)
    environment.update(env or {})
    return subprocess.run([sys.executable, str(SCRIPT), *args], cwd=ROOT, env=environment,
                          capture_output=True, text=True, timeout=300)


def test_gen_5_golden():
    result = run_cli('gen', '5', '--format', 'text')
    assert result.returncode == 0
    assert result.stdout == PM5_TEXT
    assert result.stderr == ''


def test_gen_json():
    result = run_cli('gen', '3', '--format', 'json')
    assert result.returncode == 0
    assert json.loads(result.stdout) == {'order': 3, 'rows': [[0, 1, 1], [1, 0, 1], [1, 1, 0]]}
    assert result.stdout.endswith('}\n')


@pytest.mark.parametrize('args', [
    ('gen', '0'),
    ('gen',),
    ('gen', '5', '--format', 'csv'),
    ('gen', '5', '--range', '3..6'),
    ('dnp', '2'),
    ('resilience', '--range', '3..5'),
    ('resilience', '5', '--failures', '5'),
    ('props', '--range', '9..3'),
    ('export', '5', '--format', 'json'),
    ('resilience', '5', '--seed', '-1'),
    ('resilience', '5', '--fail-set', '1,x'),
])
def test_usage_errors_exit_2(args):
    result = run_cli(*args)
    assert result.returncode == 2
    assert result.stdout == ''
    assert 'error' in result.stderr


def test_gen_0_message():
    result = run_cli('gen', '0')
    assert 'matrix order must be >= 1' in result.stderr


def test_capacity_and_config_errors(tmp_path):
    result = run_cli('gen', '11', env={'PASCALNET_MAX_ORDER': '10'})
    assert result.returncode == 2
    assert 'exceeds the configured maximum of 10' in result.stderr

    result = run_cli('gen', '5', env={'PASCALNET_MAX_ORDER': 'lots'})
    assert result.returncode == 2
    assert 'PASCALNET_MAX_ORDER' in result.stderr


def test_version():
    result = run_cli('--version')
    assert result.returncode == 0
    assert '1.0.0' in result.stdout


def test_table1_text():
    result = run_cli('table1')
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    header = [cell.strip() for cell in lines[0].split('|')[1:-1]]
    assert header == ['PG(n)', 'Conjecture satisfied', 'i', 'DNP', 'Degree', 'Agrees', 'Discrepancy']
    rows = {}
    for line in lines[2:]:
        if not line.startswith('  |'):
            break
        cells = [cell.strip() for cell in line.split('|')[1:-1]]
        rows[int(cells[0])] = cells
    assert sorted(rows) == [8, 9, 10, 11, 14, 15, 16, 17, 32, 33, 34, 40]
    assert rows[33][1:5] == ['Case N', '17, 33', 'V17, V33', '32']
    assert rows[16][1] == 'Case 1'
    assert 'printed Case N' in rows[16][6]
    assert 'printed 19' in rows[32][6]
    assert rows[8][6] == ''
    assert 'Notes:' in result.stdout
    # every table line has the same width
    table_lines = [line for line in lines if line.startswith('  |') or line.startswith('  +')]
    assert len({len(line) for line in table_lines}) == 1


def test_table1_csv():
    result = run_cli('table1', '--format', 'csv', '--range', '16..17')
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == 'n,case,formula_indices,brute_indices,degree,agrees,paper_discrepancy'
    assert lines[1] == '16,Case 1,9,9,15,true,"case label: printed Case N, order 16 is Case 1"'
    assert lines[2] == '17,Case N,9;17,9;17,16,true,'


def test_dnp_json():
    result = run_cli('dnp', '33', '--format', 'json')
    assert result.returncode == 0
    data = json.loads(result.stdout)
    assert data['formula_indices'] == data['brute_indices'] == [17, 33]


def test_props_text_starts_with_topology():
    result = run_cli('props', '5')
    assert result.returncode == 0
    assert 'PG(5) PROPERTIES' in result.stdout
    assert result.stdout.index('Topology:') < result.stdout.index('Property')
    assert 'avg_hops: 11/10' in result.stdout
    assert 'FAIL' not in result.stdout


def test_props_json_range():
    result = run_cli('props', '--range', '3..6', '--format', 'json')
    assert result.returncode == 0
    reports = json.loads(result.stdout)
    assert len(reports) == 4 * 14
    assert all(r['passed'] for r in reports)


def test_resilience_csv_is_reproducible():
    args = ('resilience', '--seed', '42', '--trials', '100', '--failures', '2', '--range', '33..33',
            '--format', 'csv')
    first = run_cli(*args)
    second = run_cli(*args)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    lines = first.stdout.splitlines()
    assert lines[0] == 'trial,failed,connected,diameter,avg_hops_num,avg_hops_den,hub_used'
    assert len(lines) == 101


def test_resilience_v1_failure():
    result = run_cli('resilience', '33', '--fail-set', '1', '--format', 'csv')
    assert result.returncode == 0
    row = result.stdout.splitlines()[1].split(',')
    assert row[:4] == ['1', '1', 'true', '2']
    assert row[-1] == '17'


def test_resilience_config_file(tmp_path):
    config = tmp_path / 'scenario.json'
    config.write_text(json.dumps({'n': 17, 'failures': 1, 'trials': 3, 'seed': 9}), encoding='utf-8')
    result = run_cli('resilience', '--config', str(config), '--format', 'json')
    assert result.returncode == 0
    data = json.loads(result.stdout)
    assert (data['n'], data['trials'], data['seed']) == (17, 3, 9)
    assert len(data['reports']) == 3

    result = run_cli('resilience', '16', '--config', str(config))
    assert result.returncode == 2


def test_export_dot_and_csv():
    result = run_cli('export', '3')
    assert result.returncode == 0
    assert result.stdout == (
        'graph "PG3" {\n'
        '  v1;\n'
        '  v2;\n'
        '  v3;\n'
        '  v1 -- v2;\n'
        '  v1 -- v3;\n'
        '  v2 -- v3;\n'
        '}\n'
    )
    result = run_cli('export', '3', '--format', 'csv')
    assert result.stdout == 'u,v\n1,2\n1,3\n2,3\n'


def test_out_writes_plain_file(tmp_path):
    target = tmp_path / 'table.txt'
    result = run_cli('table1', '--out', str(target))
    assert result.returncode == 0
    assert result.stdout == ''
    text = target.read_text(encoding='utf-8')
    assert '\x1b[' not in text
    assert 'Case N' in text


def test_verbose_goes_to_stderr():
    quiet = run_cli('gen', '5')
    loud = run_cli('gen', '5', '-v')
    assert loud.stdout == quiet.stdout == PM5_TEXT
    assert '[CLI]' in loud.stderr
