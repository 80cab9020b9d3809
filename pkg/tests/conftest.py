import numpy as np
import pytest

from conceptlearn import EmbeddingStore, random_gaussian_embedding


@pytest.fixture
def tiny_store(tmp_path):
    path = tmp_path / "tiny.txt"
    path.write_text("cat 1.0 0.0 0.0\ndog 0.0 1.0 0.0\n")
    return path


@pytest.fixture
def small_store():
    return EmbeddingStore(
        name="small",
        dimension=2,
        vocabulary=("cat", "dog"),
        vectors=np.array([[1.0, 0.0], [0.0, 1.0]]),
    )


@pytest.fixture
def gaussian_store():
    vocab = [f"w{i:04d}" for i in range(400)]
    return random_gaussian_embedding(vocab, 8, seed=123, name="g400")


def pairwise_auc(scores, labels):
    """Brute-force Mann-Whitney oracle: mean over all pos/neg pairs of
    1[pos > neg] + 0.5 * 1[pos == neg]."""
    scores = np.asarray(scores, dtype=float)
    labels = np.asarray(labels, dtype=bool)
    pos = scores[labels]
    neg = scores[~labels]
    total = 0.0
    for p in pos:
        for n in neg:
            if p > n:
                total += 1.0
            elif p == n:
                total += 0.5
    return total / (len(pos) * len(neg))
