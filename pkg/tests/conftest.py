import pytest
from hypothesis import settings

from inose import example, run_pipeline
from inose.catalog import two_isogeny

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(scope="session")
def d5():
    return example("d5")


@pytest.fixture(scope="session")
def d6():
    return example("d6")


@pytest.fixture(scope="session")
def run5(d5):
    return run_pipeline(d5.e1, d5.e2, d5.phi)


@pytest.fixture(scope="session")
def run6(d6):
    return run_pipeline(d6.e1, d6.e2, d6.phi)


@pytest.fixture(scope="session")
def iso2():
    return two_isogeny(1, -1)
