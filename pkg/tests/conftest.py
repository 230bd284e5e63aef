import pytest

from liftspin.qexp import eigenform


@pytest.fixture(scope="session")
def f20():
    """Weight-20 normalized eigenform (the f of the numeric checks, k=10)."""
    return eigenform(20)


@pytest.fixture(scope="session")
def g12():
    """Weight-12 normalized eigenform (the g of the numeric checks)."""
    return eigenform(12)
