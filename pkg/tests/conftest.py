import pytest

from ncpforge.catalog import GroupSpec
from ncpforge.group import build_group
from ncpforge.ncp import build_ncp


@pytest.fixture(scope="session")
def a3():
    return build_group(GroupSpec("A", 3))


@pytest.fixture(scope="session")
def a3_ncp(a3):
    return build_ncp(a3)


@pytest.fixture(scope="session")
def b3():
    return build_group(GroupSpec("B", 3))


@pytest.fixture(scope="session")
def b3_ncp(b3):
    return build_ncp(b3)


@pytest.fixture(scope="session")
def g333():
    return build_group(GroupSpec("G", 3, 3))


@pytest.fixture(scope="session")
def g333_ncp(g333):
    return build_ncp(g333)
