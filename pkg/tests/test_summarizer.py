import numpy as np
import pytest

from multisum import corpus, summarizer as sm
from multisum.errors import AlreadyDampened
from multisum.simgraph import graph_from_matrix

from conftest import WORKED, random_graph
from oracles import (naive_base_scores, naive_multi_round, naive_pagerank,
                     naive_ranking)


def config(**kwargs):
    kwargs.setdefault("method", "multiround")
    return sm.SummarizerConfig(**kwargs)


class TestBaseImportance:
    def test_hand_example(self):
        g = graph_from_matrix([[0, 0.5, 0.2], [0, 0, 0.4], [0, 0, 0]])
        im = sm.base_importance(g, beta1=1.0, beta2=0.3)
        assert im.scores == pytest.approx([0.70, 0.55, 0.18], abs=1e-12)

    def test_zero_weights(self):
        g = graph_from_matrix(WORKED)
        assert not sm.base_importance(g, 0.0, 0.0).scores.any()

    def test_singleton_over_is_zero(self):
        g = graph_from_matrix(WORKED)
        im = sm.base_importance(g, 1.0, 1.0, over={2})
        assert im.scores[2] == 0.0

    def test_matches_naive_on_random_graphs(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            g = random_graph(rng)
            b1, b2 = rng.uniform(0, 2, size=2)
            im = sm.base_importance(g, b1, b2)
            expected = naive_base_scores(g.sim, b1, b2, range(g.n))
            for i in range(g.n):
                assert im.scores[i] == pytest.approx(expected[i], abs=1e-9)


class TestPacsum:
    def test_worked_example_top2(self, worked_graph):
        cfg = config(method="pacsum", beta1=1.0, beta2=1.0, k=2)
        assert sm.select_pacsum(worked_graph, cfg) == [0, 1]

    def test_k_at_least_n_returns_all(self, worked_graph):
        cfg = config(method="pacsum", k=9)
        assert sm.select_pacsum(worked_graph, cfg) == [0, 1, 2, 3]

    def test_all_zero_matrix_tie_break(self):
        g = graph_from_matrix(np.zeros((5, 5)))
        cfg = config(method="pacsum", k=3)
        assert sm.select_pacsum(g, cfg) == [0, 1, 2]

    def test_ranking_matches_naive(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            g = random_graph(rng)
            b1, b2 = rng.uniform(0, 2, size=2)
            cfg = config(method="pacsum", beta1=float(b1), beta2=float(b2))
            assert sm.pacsum_ranking(g, cfg) == naive_ranking(g.sim, b1, b2)


class TestDampen:
    def _state(self, graph):
        return sm.SelectionState(selected=[], remaining=set(range(graph.n)),
                                 working_sim=graph.sim.copy())

    def test_identity_scaling(self, worked_graph):
        state = self._state(worked_graph)
        sm.dampen_selected(state, 1, 1.0, 1.0)
        assert (state.working_sim == worked_graph.sim).all()

    def test_annihilation(self, worked_graph):
        state = self._state(worked_graph)
        sm.dampen_selected(state, 1, 0.0, 0.0)
        assert not state.working_sim[1, :].any()
        assert not state.working_sim[:, 1].any()
        assert state.working_sim[0, 2] == worked_graph.sim[0, 2]

    def test_forward_edge_scaled_by_alpha1(self, worked_graph):
        state = self._state(worked_graph)
        sm.dampen_selected(state, 1, 0.5, 1.0)
        assert state.working_sim[1, 2] == pytest.approx(0.30)

    def test_backward_edge_scaled_by_alpha2(self, worked_graph):
        state = self._state(worked_graph)
        sm.dampen_selected(state, 1, 1.0, 0.5)
        assert state.working_sim[0, 1] == pytest.approx(0.45)

    def test_double_dampen_rejected(self, worked_graph):
        state = self._state(worked_graph)
        sm.dampen_selected(state, 1, 0.5, 0.5)
        with pytest.raises(AlreadyDampened):
            sm.dampen_selected(state, 1, 0.5, 0.5)


class TestMultiRound:
    def test_worked_example_alpha_zero(self, worked_graph):
        cfg = config(k=2, alpha1=0.0, alpha2=0.0)
        picked, state = sm.select_multi_round(worked_graph, cfg,
                                              return_state=True)
        assert picked == [1, 2]
        assert state.selected == [1, 2]
        assert state.trace[0].scores == pytest.approx([1.7, 1.8, 1.5, 0.6])
        round2 = state.trace[1].scores
        assert [round2[i] for i in (0, 2, 3)] == \
            pytest.approx([0.8, 0.9, 0.3], abs=1e-12)

    def test_worked_example_alpha_one_reduces_to_pacsum(self, worked_graph):
        cfg = config(k=2, alpha1=1.0, alpha2=1.0)
        picked, state = sm.select_multi_round(worked_graph, cfg,
                                              return_state=True)
        assert picked == [0, 1]
        round2 = state.trace[1].scores
        assert [round2[i] for i in (0, 2, 3)] == \
            pytest.approx([1.7, 1.5, 0.6], abs=1e-12)

    def test_single_sentence(self):
        g = graph_from_matrix([[0.0]])
        assert sm.select_multi_round(g, config(k=3)) == [0]

    def test_reduction_identity_on_random_graphs(self):
        # alpha1=beta2, alpha2=beta1 collapses every round score to the
        # one-shot centrality score
        rng = np.random.default_rng(17)
        for _ in range(200):
            g = random_graph(rng)
            b1, b2 = rng.uniform(0, 2, size=2)
            k = int(rng.integers(1, 6))
            cfg = config(k=k, beta1=float(b1), beta2=float(b2),
                         alpha1=float(b2), alpha2=float(b1))
            _, state = sm.select_multi_round(g, cfg, return_state=True)
            ranking = sm.pacsum_ranking(g, cfg)
            assert state.selected == ranking[:min(k, g.n)]

    def test_matches_naive_oracle(self):
        rng = np.random.default_rng(19)
        for _ in range(200):
            g = random_graph(rng)
            b1, b2 = rng.uniform(0, 2, size=2)
            a1, a2 = rng.uniform(-2, 2, size=2)
            k = int(rng.integers(1, 6))
            cfg = config(k=k, beta1=float(b1), beta2=float(b2),
                         alpha1=float(a1), alpha2=float(a2))
            picked, state = sm.select_multi_round(g, cfg, return_state=True)
            expected_sel, expected_rounds = naive_multi_round(
                g.sim, k, b1, b2, a1, a2)
            assert state.selected == expected_sel
            for iv, scores in zip(state.trace, expected_rounds):
                for c, v in scores.items():
                    assert iv.scores[c] == pytest.approx(v, abs=1e-9)

    def test_exclusion_property_alpha_zero(self):
        # with alpha=0, candidate scores ignore candidate-selected edges
        rng = np.random.default_rng(23)
        for _ in range(50):
            g = random_graph(rng, n=8)
            cfg = config(k=3, alpha1=0.0, alpha2=0.0)
            _, state = sm.select_multi_round(g, cfg, return_state=True)
            first = state.selected[0]
            perturbed = g.sim.copy()
            perturbed[first, first + 1:] += 5.0
            perturbed[:first, first] += 5.0
            g2 = graph_from_matrix(perturbed)
            im1 = sm.base_importance(g, 1.0, 1.0,
                                     over=set(range(g.n)) - {first})
            im2 = sm.base_importance(g2, 1.0, 1.0,
                                     over=set(range(g.n)) - {first})
            assert im1.scores == pytest.approx(im2.scores)

    def test_monotone_redundancy_penalty(self):
        # lowering alpha never raises a candidate's round-2 score when all
        # post-threshold similarities are nonnegative
        rng = np.random.default_rng(29)
        for _ in range(50):
            g = random_graph(rng, n=10)
            b1, b2 = rng.uniform(0, 2, size=2)
            lo, hi = sorted(rng.uniform(-2, 2, size=2))
            scores = {}
            for alpha in (lo, hi):
                cfg = config(k=2, beta1=float(b1), beta2=float(b2),
                             alpha1=float(alpha), alpha2=float(alpha))
                _, state = sm.select_multi_round(g, cfg, return_state=True)
                scores[alpha] = (state.selected[0], state.trace[1].scores)
            if scores[lo][0] == scores[hi][0]:  # same first pick
                first = scores[lo][0]
                rest = [i for i in range(g.n) if i != first]
                for c in rest:
                    assert scores[lo][1][c] <= scores[hi][1][c] + 1e-12


class TestLead:
    def test_basic(self):
        assert sm.select_lead(5, 3) == [0, 1, 2]

    def test_truncation(self):
        assert sm.select_lead(2, 3) == [0, 1]

    def test_zero_k(self):
        assert sm.select_lead(5, 0) == []

    def test_accepts_document(self):
        doc = corpus.make_document("d", ["A b.", "C d.", "E f.", "G h."],
                                   "latin")
        assert sm.select_lead(doc, 3) == [0, 1, 2]


class TestTextRank:
    def test_uniform_complete_graph(self):
        m = np.full((4, 4), 0.5)
        g = graph_from_matrix(m)
        ranks, _ = sm.textrank_scores(g)
        assert ranks == pytest.approx([0.25] * 4, abs=1e-9)
        assert sm.select_textrank(g, k=2) == [0, 1]

    def test_all_zero_matrix_uniform_via_dangling(self):
        g = graph_from_matrix(np.zeros((5, 5)))
        ranks, _ = sm.textrank_scores(g)
        assert ranks == pytest.approx([0.2] * 5, abs=1e-9)
        assert sm.select_textrank(g, k=2) == [0, 1]

    def test_star_graph_center_ranked_first(self):
        m = np.zeros((5, 5))
        m[0, 1:] = 0.8
        g = graph_from_matrix(m)
        ranks, _ = sm.textrank_scores(g)
        assert ranks[0] > max(ranks[1:])
        expected = naive_pagerank(g.sim)
        assert ranks == pytest.approx(expected, abs=1e-6)

    def test_matches_power_iteration_oracle(self):
        rng = np.random.default_rng(31)
        for _ in range(20):
            g = random_graph(rng, n=int(rng.integers(2, 12)))
            ranks, _ = sm.textrank_scores(g, tol=1e-12, max_iter=2000)
            expected = naive_pagerank(g.sim, iterations=2000)
            assert ranks == pytest.approx(expected, abs=1e-8)

    def test_converges_within_max_iter(self):
        rng = np.random.default_rng(37)
        g = random_graph(rng, n=20)
        _, iters = sm.textrank_scores(g)
        assert iters < 100
