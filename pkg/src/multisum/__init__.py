"""Unsupervised extractive summarization via multi-round sentence-graph
centrality, with Lead/TextRank/single-round baselines, ROUGE scoring, and a
grid-search evaluation harness."""

from .corpus import (CJK, LATIN, DatasetSplit, Document, Sentence,
                     document_from_text, load_dataset, make_document,
                     segment_sentences, tokenize)
from .encoder import (TfIdfModel, encode_tfidf, fit_tfidf,
                      load_external_embeddings)
from .harness import (EvalResult, GridSpec, compare_report, evaluate_method,
                      grid_search, summarize_document)
from .rouge import RougeScore, rouge_l, rouge_n, score_summary, to_unicode_tokens
from .simgraph import (SimilarityGraph, ThresholdSpec, apply_threshold,
                       build_similarity_matrix, compute_threshold,
                       graph_from_matrix, threshold_graph)
from .summarizer import (ImportanceVector, SelectionState, SummarizerConfig,
                         base_importance, dampen_selected, round_importance,
                         select_lead, select_multi_round, select_pacsum,
                         select_textrank)

__version__ = "0.1.0"
