#!/usr/bin/env python3
"""
Every emitted JSON document validates against its schema in docs/schemas
"""

import json
from pathlib import Path

import jsonschema
import pytest

from pascalnet.dnp import dnp_report, table1_report
from pascalnet.export import dumps
from pascalnet.graph import from_matrix
from pascalnet.matrix import generate
from pascalnet.properties import run_property_suite
from pascalnet.resilience import FailureScenario, assess, failure_sweep

SCHEMA_DIR = Path(__file__).resolve().parent / 'docs' / 'schemas'


def load_schema(name):
    schema = json.loads((SCHEMA_DIR / f'{name}.schema.json').read_text(encoding='utf-8'))
    jsonschema.Draft7Validator.check_schema(schema)
    return schema


def validate(document, name):
    # round trip through the emitted text, as a consumer would read it
    jsonschema.validate(json.loads(dumps(document)), load_schema(name))


def test_matrix_documents():
    validate(generate(1).to_dict(), 'pascal_matrix')
    validate(generate(17).to_dict(), 'pascal_matrix')


def test_property_documents():
    reports = run_property_suite(10)
    validate(reports[0].to_dict(), 'property_report')
    validate([r.to_dict() for r in reports], 'property_report')


def test_dnp_documents():
    validate(dnp_report(16).to_dict(), 'dnp_report')
    validate([r.to_dict() for r in table1_report()], 'dnp_report')


def test_resilience_documents():
    scenario = FailureScenario(n=33, failures=2, trials=5, seed=42)
    reports = failure_sweep(scenario)
    validate(reports[0].to_dict(), 'resilience_report')
    validate({'n': 33, 'failures': 2, 'trials': 5, 'seed': 42,
              'reports': [r.to_dict() for r in reports]}, 'resilience_report')
    # a disconnected survivor set carries the 'inf' diameter marker
    validate(assess(from_matrix(generate(4)), [1, 3]).to_dict(), 'resilience_report')


def test_schema_rejects_malformed_documents():
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate({'order': 2, 'rows': [[0, 2], [2, 0]]}, load_schema('pascal_matrix'))
    bad = dnp_report(9).to_dict()
    bad['label'] = 'Case 3'
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(bad, load_schema('dnp_report'))
