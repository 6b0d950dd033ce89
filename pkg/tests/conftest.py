import pytest

from su3reps.irreps import build_census
from su3reps.modcount import module_table


@pytest.fixture(scope="session")
def census110():
    return build_census(110)


@pytest.fixture(scope="session")
def table110(census110):
    return module_table(110, census110)
