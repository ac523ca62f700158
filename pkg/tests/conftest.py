import pytest

from dpzoo.catalog import default_catalog


@pytest.fixture(scope="session")
def catalog():
    return default_catalog()
