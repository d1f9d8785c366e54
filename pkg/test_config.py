#!/usr/bin/env python3
"""
Tests for environment-driven settings
"""

import pytest

from pascalnet.config import (DEFAULT_MAX_ORDER, DEFAULT_PLANARITY_CAP, Settings, load_settings,
                              resolve_max_order)
from pascalnet.errors import ConfigError


def test_defaults():
    assert load_settings() == Settings(max_order=DEFAULT_MAX_ORDER,
                                       planarity_cap=DEFAULT_PLANARITY_CAP,
                                       default_seed=0, use_color=True)
    assert DEFAULT_MAX_ORDER == 4096


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv('PASCALNET_MAX_ORDER', '512')
    monkeypatch.setenv('PASCALNET_PLANARITY_CAP', '8')
    monkeypatch.setenv('PASCALNET_SEED', '42')
    monkeypatch.setenv('PASCALNET_COLOR', 'off')
    settings = load_settings()
    assert (settings.max_order, settings.planarity_cap, settings.default_seed) == (512, 8, 42)
    assert settings.use_color is False
    assert resolve_max_order() == 512
    assert resolve_max_order(7) == 7


def test_no_color_wins(monkeypatch):
    monkeypatch.setenv('PASCALNET_COLOR', 'true')
    monkeypatch.setenv('NO_COLOR', '1')
    assert load_settings().use_color is False


@pytest.mark.parametrize('name, value', [
    ('PASCALNET_MAX_ORDER', 'big'),
    ('PASCALNET_MAX_ORDER', '0'),
    ('PASCALNET_SEED', '-3'),
    ('PASCALNET_COLOR', 'maybe'),
])
def test_malformed_values(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigError, match=name):
        load_settings()
