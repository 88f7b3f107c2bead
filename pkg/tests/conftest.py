import pytest
from hypothesis import settings

from taux.fileio import bundled
from taux.verify import catalog

settings.register_profile("taux", max_examples=40, deadline=None)
settings.load_profile("taux")


@pytest.fixture(scope="session")
def gamma():
    return catalog("gamma")


@pytest.fixture(scope="session")
def kron4():
    return catalog("kronecker", 4)


@pytest.fixture(scope="session")
def kron3():
    return catalog("kronecker", 3)


@pytest.fixture(scope="session", params=["gamma", "a2", "a3", "nakayama3"])
def finite(request):
    return catalog(request.param)


@pytest.fixture(scope="session")
def alg():
    return {name: bundled(name) for name in ("gamma", "kronecker", "a1", "a2", "a3", "nakayama3")}
