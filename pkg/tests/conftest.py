"""Shared fixtures: one interned group per parameter pair, reused suite-wide.

Group engines are append-only (the interner only grows), so sharing instances
across tests is safe and keeps the exhaustive scans fast.
"""

import pytest

from heckebound import CoxeterGroup, GroupParams, HeckeAlgebra
from heckebound.kl import KLContext


@pytest.fixture(scope="session")
def group33():
    return CoxeterGroup(GroupParams(3, 3))


@pytest.fixture(scope="session")
def group43():
    return CoxeterGroup(GroupParams(4, 3))


@pytest.fixture(scope="session")
def group53():
    return CoxeterGroup(GroupParams(5, 3))


@pytest.fixture(scope="session")
def group73():
    return CoxeterGroup(GroupParams(7, 3))


@pytest.fixture(scope="session")
def group54():
    return CoxeterGroup(GroupParams(5, 4))


@pytest.fixture(scope="session")
def group55():
    return CoxeterGroup(GroupParams(5, 5))


@pytest.fixture(scope="session")
def group64():
    return CoxeterGroup(GroupParams(6, 4))


@pytest.fixture(scope="session")
def hecke73(group73):
    return HeckeAlgebra(group73, memo=True)


@pytest.fixture(scope="session")
def kl73(group73, hecke73):
    return KLContext(group73, hecke=hecke73)
