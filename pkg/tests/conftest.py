import pytest

from conjsizes.construction import FamilyParams, build_G, build_P
from conjsizes.verifier import FamilyContext, default_zoo


@pytest.fixture(scope="session")
def params5():
    return FamilyParams.create(5)


@pytest.fixture(scope="session")
def params7():
    return FamilyParams.create(7)


@pytest.fixture(scope="session")
def G5(params5):
    return build_G(params5)


@pytest.fixture(scope="session")
def P5(params5):
    return build_P(params5)


@pytest.fixture(scope="session")
def ctx5(params5):
    return FamilyContext(params5)


@pytest.fixture(scope="session")
def zoo():
    return default_zoo(200)
