from pathlib import Path

import numpy as np
import pytest

from multisum.simgraph import graph_from_matrix

DATA_DIR = Path(__file__).resolve().parents[1] / "data"
MINI_CORPUS = DATA_DIR / "mini_corpus.jsonl"

# 4-sentence worked example used across selector tests
WORKED = np.array([
    [0.0, 0.9, 0.7, 0.1],
    [0.0, 0.0, 0.6, 0.3],
    [0.0, 0.0, 0.0, 0.2],
    [0.0, 0.0, 0.0, 0.0],
])


@pytest.fixture
def worked_graph():
    return graph_from_matrix(WORKED)


def random_graph(rng, n=None):
    """Random thresholded-looking graph with uniform [0, 1) similarities."""
    if n is None:
        n = rng.integers(2, 31)
    m = np.triu(rng.random((n, n)), k=1)
    return graph_from_matrix(m)
