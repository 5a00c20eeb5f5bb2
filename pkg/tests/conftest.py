"""Shared fixtures: the bundled reference log and registers built from it."""

import pytest

from signalfield import engine, register
from signalfield.harness import reference


@pytest.fixture(scope="session")
def gasfumes_entries():
    return reference.bundled_log_entries()


@pytest.fixture()
def gasfumes_register(gasfumes_entries):
    return register.replay(gasfumes_entries, engine.BIWEEKLY, engine.Tier.LITE)
