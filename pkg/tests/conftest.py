import pytest

from curvebound import permgroup


@pytest.fixture(scope="session")
def alt7():
    return permgroup.load_group("alt7")


@pytest.fixture(scope="session")
def m11():
    return permgroup.load_group("m11")
