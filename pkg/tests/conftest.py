import pytest

from morsegraph import sample_gnp, trial_seed

CORPUS_SEED = 900913


def small_corpus(extra_reps: int = 1):
    """Seeded G(n, p) graphs over n in 5..12, p in 0.1..0.9."""
    graphs = []
    cell = 0
    for n in range(5, 13):
        for tenths in range(1, 10):
            for _ in range(extra_reps):
                graphs.append(sample_gnp(n, tenths / 10.0, trial_seed(CORPUS_SEED, cell)))
                cell += 1
    return graphs


@pytest.fixture(scope="session")
def corpus_n12():
    # 8 vertex counts x 9 densities x 7 repetitions = 504 graphs
    return small_corpus(extra_reps=7)


@pytest.fixture(scope="session")
def corpus_n40():
    graphs = []
    cell = 10_000
    for n in (16, 20, 24, 28, 32, 36, 40):
        for tenths in range(1, 10):
            graphs.append(sample_gnp(n, tenths / 10.0, trial_seed(CORPUS_SEED, cell)))
            cell += 1
    return graphs
