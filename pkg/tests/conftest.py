import pytest

from answermeter import (
    SessionEngine,
    default_catalog,
    default_templates,
    default_wordlists,
)
from answermeter.profiles import FAST_HASH_PARAMS


@pytest.fixture(scope="session")
def wordlists():
    return default_wordlists()


@pytest.fixture(scope="session")
def templates():
    return default_templates()


@pytest.fixture(scope="session")
def catalog():
    return default_catalog()


@pytest.fixture
def engine(catalog, wordlists, templates):
    return SessionEngine(
        catalog, wordlists, templates, hash_params=FAST_HASH_PARAMS
    )
