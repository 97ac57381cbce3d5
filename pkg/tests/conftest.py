"""Shared fixtures: field contexts, cached presentations, and the
acceptance-line terminal summary.
"""

import pytest

from psiring.fields import QQ, DEFAULT_PRIME, PrimeField
from psiring.presentation import build_an, build_bnm

_CACHE = {}

ACCEPTANCE_LINES = []


def record_acceptance(line):
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def cached_an(n, field=None):
    key = ("an", n, None if field is None else field.name)
    if key not in _CACHE:
        spec = build_an(n)
        _CACHE[key] = spec if field is None else spec.to_field(field)
    return _CACHE[key]


def cached_bnm(n, m, field=None):
    key = ("bnm", n, m, None if field is None else field.name)
    if key not in _CACHE:
        spec = build_bnm(n, m)
        _CACHE[key] = spec if field is None else spec.to_field(field)
    return _CACHE[key]


@pytest.fixture(scope="session")
def gfp():
    return PrimeField(DEFAULT_PRIME)


@pytest.fixture(scope="session")
def qq():
    return QQ
