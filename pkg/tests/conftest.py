import time

import pytest

from fanopoly import CensusConfig, enumerate_classes


@pytest.fixture(scope="session")
def census_b1():
    return enumerate_classes(CensusConfig(bound=1))


@pytest.fixture(scope="session")
def census_b2():
    return enumerate_classes(CensusConfig(bound=2))


@pytest.fixture(scope="session")
def census_b3_timed():
    t0 = time.monotonic()
    reports = enumerate_classes(CensusConfig(bound=3))
    return reports, time.monotonic() - t0


@pytest.fixture(scope="session")
def census_b3(census_b3_timed):
    return census_b3_timed[0]
