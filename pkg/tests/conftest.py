"""Shared fixtures.

Verification contexts memoize exchange graphs and character tables, so
one context per matrix type is shared across every test module via the
``ctx_for`` fixture.  Building them is the dominant cost of the suite.
"""

import pytest

from valq.exchange import builtin_exchange_data
from valq.verify import VerifyContext

_CACHE = {}


def context_for(name, **kwargs):
    key = (name, tuple(sorted(kwargs.items())))
    if key not in _CACHE:
        _CACHE[key] = VerifyContext(
            builtin_exchange_data(name), name=name, **kwargs
        )
    return _CACHE[key]


@pytest.fixture(scope="session")
def ctx_for():
    return context_for


@pytest.fixture(scope="session")
def b2():
    return builtin_exchange_data("B2")


@pytest.fixture(scope="session")
def g2():
    return builtin_exchange_data("G2")


@pytest.fixture(scope="session")
def a3():
    return builtin_exchange_data("A3")


@pytest.fixture(scope="session")
def b3():
    return builtin_exchange_data("B3")
