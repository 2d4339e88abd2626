"""Sentence similarity graph: inner-product adjacency and min-max thresholding."""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, OutOfRange, TooFewSentences


@dataclass(frozen=True)
class SimilarityGraph:
    """Dense upper-triangular similarity matrix over sentence pairs.

    sim is (n, n); only entries with i < j are meaningful. s_min/s_max are
    the extrema over the upper triangle before any thresholding.
    """

    n: int
    sim: np.ndarray
    s_min: float
    s_max: float

    def upper_values(self):
        i, j = np.triu_indices(self.n, k=1)
        return self.sim[i, j]


@dataclass(frozen=True)
class ThresholdSpec:
    a: float
    th: float


def graph_from_matrix(matrix):
    """Build a SimilarityGraph from a full or upper-triangular matrix.

    Convenience for tests and worked examples; only the upper triangle is
    retained.
    """
    m = np.asarray(matrix, dtype=float)
    n = m.shape[0]
    sim = np.triu(m, k=1)
    vals = sim[np.triu_indices(n, k=1)]
    return SimilarityGraph(n=n, sim=sim,
                           s_min=float(vals.min()) if vals.size else 0.0,
                           s_max=float(vals.max()) if vals.size else 0.0)


def build_similarity_matrix(vectors):
    """Pairwise inner products of sentence vectors, stored upper-triangular."""
    try:
        v = np.asarray(vectors, dtype=float)
    except ValueError as e:
        raise DimensionMismatch(str(e)) from e
    if v.ndim != 2:
        raise DimensionMismatch("expected a list of equal-length vectors")
    n = v.shape[0]
    if n < 2:
        raise TooFewSentences(f"need at least 2 sentences, got {n}")
    if not np.isfinite(v).all():
        raise DimensionMismatch("vectors contain non-finite entries")
    sim = np.triu(v @ v.T, k=1)
    vals = sim[np.triu_indices(n, k=1)]
    return SimilarityGraph(n=n, sim=sim, s_min=float(vals.min()),
                           s_max=float(vals.max()))


def compute_threshold(graph, a):
    """TH = s_min + a * (s_max - s_min) over the upper-triangle extrema."""
    if not 0.0 <= a <= 1.0:
        raise OutOfRange(f"threshold parameter a must be in [0, 1], got {a}")
    return ThresholdSpec(a=a, th=graph.s_min + a * (graph.s_max - graph.s_min))


def apply_threshold(graph, spec):
    """Zero every similarity strictly below the threshold; values equal to
    the threshold survive."""
    i, j = np.triu_indices(graph.n, k=1)
    sim = np.zeros_like(graph.sim)
    vals = graph.sim[i, j]
    sim[i, j] = np.where(vals >= spec.th, vals, 0.0)
    return SimilarityGraph(n=graph.n, sim=sim, s_min=graph.s_min,
                           s_max=graph.s_max)


def threshold_graph(graph, a):
    """compute_threshold + apply_threshold in one step."""
    return apply_threshold(graph, compute_threshold(graph, a))


def dump_matrix_tsv(graph, path):
    """Write the upper-triangle entries as TSV rows (i, j, value)."""
    with open(path, "w", encoding="utf-8") as fh:
        for i in range(graph.n):
            for j in range(i + 1, graph.n):
                fh.write(f"{i}\t{j}\t{graph.sim[i, j]!r}\n")
