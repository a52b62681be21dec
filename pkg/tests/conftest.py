from __future__ import annotations

import pytest

from ksparity import catalog
from ksparity.projectors import enumerate_bases, enumerate_projectors


@pytest.fixture(scope="session")
def star():
    return catalog.get("star4").proof


@pytest.fixture(scope="session")
def star_projectors(star):
    return enumerate_projectors(star)


@pytest.fixture(scope="session")
def star_system(star_projectors):
    return enumerate_bases(star_projectors)


@pytest.fixture(scope="session")
def peres_mermin():
    return catalog.get("peres-mermin").proof


@pytest.fixture(scope="session")
def kite3():
    return catalog.get("kite3").kite


@pytest.fixture(scope="session")
def kite4():
    return catalog.get("kite4").kite
