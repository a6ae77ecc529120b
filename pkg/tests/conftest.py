import pytest

from groupcovers import build_catalog, bundled_catalog_text, parse_catalog


@pytest.fixture(scope="session")
def corpus_entries():
    return parse_catalog(bundled_catalog_text())


@pytest.fixture(scope="session")
def corpus(corpus_entries):
    """Name -> Group for the whole bundled catalog."""
    return build_catalog(corpus_entries)
