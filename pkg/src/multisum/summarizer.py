"""Sentence selection: direction-weighted centrality, multi-round selection
with edge dampening, and the Lead/TextRank/single-round baselines."""

from dataclasses import dataclass, field

import numpy as np

from .errors import AlreadyDampened

METHODS = ("lead", "textrank", "pacsum", "multiround")


@dataclass(frozen=True)
class SummarizerConfig:
    k: int = 3
    a: float = 0.0
    beta1: float = 1.0
    beta2: float = 1.0
    alpha1: float = 0.0
    alpha2: float = 0.0
    method: str = "multiround"

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if not 0.0 <= self.a <= 1.0:
            raise ValueError(f"a must be in [0, 1], got {self.a}")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")


@dataclass(frozen=True)
class ImportanceVector:
    scores: np.ndarray  # per-sentence; meaningful only on the round's candidates
    round: int


@dataclass
class SelectionState:
    selected: list
    remaining: set
    working_sim: np.ndarray          # dampened copy, upper triangle
    trace: list = field(default_factory=list)
    dampened: set = field(default_factory=set)


def base_importance(graph, beta1, beta2, over=None):
    """Direction-weighted centrality: forward edges scaled by beta1, backward
    by beta2. Edges touching sentences outside `over` are excluded."""
    w = graph.sim
    if over is not None:
        mask = np.zeros(graph.n, dtype=bool)
        mask[list(over)] = True
        w = np.where(np.outer(mask, mask), w, 0.0)
    scores = beta1 * w.sum(axis=1) + beta2 * w.sum(axis=0)
    return ImportanceVector(scores=scores, round=1)


def _ranked(scores, candidates):
    """Candidates sorted by score descending, ties to the lowest index."""
    return sorted(candidates, key=lambda i: (-scores[i], i))


def pacsum_ranking(graph, config):
    """Full sentence ranking from a single centrality computation."""
    im = base_importance(graph, config.beta1, config.beta2)
    return _ranked(im.scores, range(graph.n))


def select_pacsum(graph, config):
    """Single-round selection: top-k of the one-shot ranking, returned in
    document order."""
    k = min(config.k, graph.n)
    return sorted(pacsum_ranking(graph, config)[:k])


def dampen_selected(state, s, alpha1, alpha2):
    """Scale edges incident to just-selected sentence s: forward edges (s, j)
    by alpha1, backward edges (k, s) by alpha2. In place."""
    if s in state.dampened:
        raise AlreadyDampened(f"sentence {s} already dampened")
    state.working_sim[s, s + 1:] *= alpha1
    state.working_sim[:s, s] *= alpha2
    state.dampened.add(s)
    return state


def round_importance(state, config):
    """Scores for rounds >= 2: centrality restricted to unselected sentences
    plus, per candidate, the dampened edge values toward every selected
    sentence (no beta factors on those)."""
    n = state.working_sim.shape[0]
    w = state.working_sim
    mask = np.zeros(n, dtype=bool)
    mask[list(state.remaining)] = True
    wr = np.where(np.outer(mask, mask), w, 0.0)
    scores = config.beta1 * wr.sum(axis=1) + config.beta2 * wr.sum(axis=0)
    if state.selected:
        sym = w + w.T
        scores = scores + sym[:, state.selected].sum(axis=1)
    return ImportanceVector(scores=scores, round=len(state.selected) + 1)


def _argmax_over(scores, candidates):
    return min(candidates, key=lambda i: (-scores[i], i))


def select_multi_round(graph, config, return_state=False):
    """Greedy multi-round selection: one sentence per round, edges incident
    to each pick rescaled by (alpha1, alpha2) before the next round.

    Returns the picked indices in document order; with return_state=True also
    returns the SelectionState carrying the per-round score trace and the
    selection-order sequence.
    """
    n = graph.n
    state = SelectionState(selected=[], remaining=set(range(n)),
                           working_sim=graph.sim.copy())
    rounds = min(config.k, n)
    for _ in range(rounds):
        if not state.selected:
            im = base_importance(graph, config.beta1, config.beta2)
        else:
            im = round_importance(state, config)
        pick = _argmax_over(im.scores, state.remaining)
        state.trace.append(im)
        state.selected.append(pick)
        state.remaining.remove(pick)
        dampen_selected(state, pick, config.alpha1, config.alpha2)
    summary = sorted(state.selected)
    if return_state:
        return summary, state
    return summary


def select_lead(doc, k):
    """First min(k, n) sentence indices."""
    n = doc if isinstance(doc, int) else len(doc.sentences)
    return list(range(min(k, n)))


def textrank_scores(graph, damping=0.85, max_iter=100, tol=1e-6):
    """Weighted PageRank on the symmetric similarity graph.

    Dangling nodes (zero total edge weight) distribute their rank uniformly.
    Returns (ranks, iterations_used).
    """
    n = graph.n
    adj = graph.sim + graph.sim.T
    out = adj.sum(axis=1)
    dangling = out == 0
    # column-stochastic transition for non-dangling nodes
    trans = np.zeros_like(adj)
    nd = ~dangling
    trans[nd] = adj[nd] / out[nd, None]
    ranks = np.full(n, 1.0 / n)
    for it in range(1, max_iter + 1):
        new = ((1 - damping) / n
               + damping * (trans.T @ ranks)
               + damping * ranks[dangling].sum() / n)
        if np.abs(new - ranks).sum() < tol:
            return new, it
        ranks = new
    return ranks, max_iter


def select_textrank(graph, damping=0.85, max_iter=100, tol=1e-6, k=3):
    """Top-k sentences by PageRank stationary score, in document order."""
    ranks, _ = textrank_scores(graph, damping=damping, max_iter=max_iter,
                               tol=tol)
    kk = min(k, graph.n)
    return sorted(_ranked(ranks, range(graph.n))[:kk])
