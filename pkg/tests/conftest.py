import pytest

from monohalf.corpus import fixtures, random_corpus


def S(g, *names):
    """Mask of the named vertices."""
    return g.mask_of(str(x) for x in names)


def sample_mask(sample, label):
    out = 0
    for v, y in sample:
        if y == label:
            out |= 1 << v
    return out


@pytest.fixture(scope="session")
def fx():
    return fixtures()


@pytest.fixture(scope="session")
def small_corpus():
    """Random graphs plus fixtures, small enough for unit tests."""
    graphs = [e.graph for e in random_corpus(45, seed=7, n_min=4, n_max=8)]
    return graphs + list(fixtures().values())
