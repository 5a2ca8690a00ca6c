from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from moritactx import make_zn

settings.register_profile(
    "suite",
    max_examples=50,
    deadline=None,
    derandomize=True,
    suppress_health_check=(HealthCheck.too_slow,),
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def z2():
    return make_zn(2)


@pytest.fixture(scope="session")
def z4():
    return make_zn(4)


@pytest.fixture(scope="session")
def z6():
    return make_zn(6)


@pytest.fixture(scope="session")
def z8():
    return make_zn(8)


@pytest.fixture(scope="session")
def z12():
    return make_zn(12)
