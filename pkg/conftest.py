"""
Shared pytest setup: hypothesis profiles and a clean configuration
environment for every test
"""

import os

import hypothesis
import pytest

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))

CONFIG_VARIABLES = ('PASCALNET_MAX_ORDER', 'PASCALNET_PLANARITY_CAP', 'PASCALNET_SEED',
                    'PASCALNET_COLOR', 'NO_COLOR')


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Tests start from the built-in defaults whatever .env or the shell set"""
    for name in CONFIG_VARIABLES:
        monkeypatch.delenv(name, raising=False)
