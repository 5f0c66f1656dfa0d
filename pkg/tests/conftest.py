import pytest

from modclass import BUILTIN_CORPUS_SPECS, build_ring


@pytest.fixture(scope="session")
def corpus():
    """The frozen corpus, built once; keyed by spec string."""
    return {spec: build_ring(spec) for spec in BUILTIN_CORPUS_SPECS}


@pytest.fixture(scope="session")
def z4(corpus):
    return corpus["Z/4"]


@pytest.fixture(scope="session")
def z6(corpus):
    return corpus["Z/6"]


@pytest.fixture(scope="session")
def z8(corpus):
    return corpus["Z/8"]


@pytest.fixture(scope="session")
def m2f2(corpus):
    return corpus["M(2,GF(2))"]


@pytest.fixture(scope="session")
def t2f2(corpus):
    return corpus["T(2,GF(2))"]


@pytest.fixture(scope="session")
def gf4(corpus):
    return corpus["GF(4)"]
