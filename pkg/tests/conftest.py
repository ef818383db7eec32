import pytest

from hyperrings.corpus import CorpusSpec, generate_corpus, ordinary_ring, zn_with_products


@pytest.fixture(scope="session")
def z2():
    return ordinary_ring(2)


@pytest.fixture(scope="session")
def z4():
    return ordinary_ring(4)


@pytest.fixture(scope="session")
def z6():
    return ordinary_ring(6)


@pytest.fixture(scope="session")
def z12():
    return ordinary_ring(12)


@pytest.fixture(scope="session")
def z13a():
    return zn_with_products(13, (5, 7))


@pytest.fixture(scope="session")
def z6a():
    # A = {5, 7} reduces to {1, 5} mod 6
    return zn_with_products(6, (5, 7))


@pytest.fixture(scope="session")
def default_corpus():
    return generate_corpus(CorpusSpec())
