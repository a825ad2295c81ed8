import pytest

from nmlogic import Variant, build


@pytest.fixture(scope="session")
def nm1():
    return build(1, Variant.NM)


@pytest.fixture(scope="session")
def nmm1():
    return build(1, Variant.NM_MINUS)


@pytest.fixture(scope="session")
def nm0():
    return build(0, Variant.NM)


@pytest.fixture(scope="session")
def nmm0():
    return build(0, Variant.NM_MINUS)
