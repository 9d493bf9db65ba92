import pytest

from rankalg import verify


@pytest.fixture(scope="session")
def ascending4_markov():
    return verify.cached_markov("ascending", 4)


@pytest.fixture(scope="session")
def inversion4_markov():
    return verify.cached_markov("inversion", 4)


@pytest.fixture(scope="session")
def inversion4_groebner():
    return verify.cached_groebner("inversion", 4)


@pytest.fixture(scope="session")
def ascending4_groebner():
    return verify.cached_groebner("ascending", 4)
