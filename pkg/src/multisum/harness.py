"""Dataset-level evaluation, hyper-parameter grid search, and comparison
reports across summarization methods."""

import itertools
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import encoder as enc
from . import rouge as rg
from . import simgraph as sg
from . import summarizer as sm
from .errors import EmptySplit, MissingEmbeddings

OBJECTIVES = {"r1": "rouge1", "r2": "rouge2", "rl": "rougeL"}


@dataclass
class EvalResult:
    method: str
    config: sm.SummarizerConfig
    per_doc: list            # [(doc_id, {variant: RougeScore})]
    aggregate: dict          # {variant: {"precision","recall","f1"}}
    doc_count: int


@dataclass
class GridSpec:
    a: list = field(default_factory=lambda: [0.0])
    beta1: list = field(default_factory=lambda: [1.0])
    beta2: list = field(default_factory=lambda: [1.0])
    alpha1: list = field(default_factory=lambda: [0.0])
    alpha2: list = field(default_factory=lambda: [0.0])
    objective: str = "r1"

    def __post_init__(self):
        for name in ("a", "beta1", "beta2", "alpha1", "alpha2"):
            if not getattr(self, name):
                raise ValueError(f"grid axis {name!r} is empty")
        if self.objective not in OBJECTIVES:
            raise ValueError(f"objective must be one of {sorted(OBJECTIVES)}")

    def has_reduction_point(self):
        """True when some combination satisfies alpha1=beta2 and alpha2=beta1."""
        return (bool(set(self.alpha1) & set(self.beta2))
                and bool(set(self.alpha2) & set(self.beta1)))

    def combinations(self):
        """Lexicographic iteration over sorted axis values."""
        return itertools.product(sorted(self.a), sorted(self.beta1),
                                 sorted(self.beta2), sorted(self.alpha1),
                                 sorted(self.alpha2))

    @classmethod
    def from_json(cls, obj):
        known = {k: obj[k] for k in
                 ("a", "beta1", "beta2", "alpha1", "alpha2", "objective")
                 if k in obj}
        return cls(**known)


def summarize_document(doc, config, encoder="tfidf", embeddings=None,
                       return_state=False):
    """Run the full pipeline on one Document; returns selected indices in
    document order (and the selection state for multiround when asked).

    `embeddings` is a {doc_id: array} table from encoder.load_embedding_file.
    """
    state = None
    if config.method == "lead":
        picked = sm.select_lead(doc, config.k)
    elif doc.n == 1:
        picked = [0]
    else:
        if encoder == "external":
            if embeddings is None or doc.id not in embeddings:
                raise MissingEmbeddings(f"no embeddings for document {doc.id!r}")
            vectors = embeddings[doc.id]
        else:
            model = enc.fit_tfidf([doc], scope=enc.PER_DOCUMENT)
            vectors = enc.encode_tfidf(model, doc)
        graph = sg.threshold_graph(sg.build_similarity_matrix(vectors),
                                   config.a)
        if config.method == "textrank":
            picked = sm.select_textrank(graph, k=config.k)
        elif config.method == "pacsum":
            picked = sm.select_pacsum(graph, config)
        else:
            picked, state = sm.select_multi_round(graph, config,
                                                  return_state=True)
    if return_state:
        return picked, state
    return picked


def _score_document(doc, config, encoder, embeddings):
    picked = summarize_document(doc, config, encoder, embeddings)
    candidate = [doc.sentences[i].raw for i in picked]
    return doc.id, rg.score_summary(candidate, doc.reference_summary, doc.lang)


def evaluate_method(split, config, encoder="tfidf", embeddings=None, jobs=1):
    """Summarize and ROUGE-score every document of a split; aggregate is the
    arithmetic mean per variant, accumulated in document order regardless of
    worker scheduling."""
    docs = list(split.records)
    if not docs:
        raise EmptySplit(f"split {split.name!r} has no documents")
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            per_doc = list(pool.map(
                lambda d: _score_document(d, config, encoder, embeddings),
                docs))
    else:
        per_doc = [_score_document(d, config, encoder, embeddings)
                   for d in docs]
    aggregate = {}
    for variant in rg.VARIANTS:
        agg = {"precision": 0.0, "recall": 0.0, "f1": 0.0}
        for _, scores in per_doc:
            s = scores[variant]
            agg["precision"] += s.precision
            agg["recall"] += s.recall
            agg["f1"] += s.f1
        aggregate[variant] = {k: v / len(per_doc) for k, v in agg.items()}
    return EvalResult(method=config.method, config=config, per_doc=per_doc,
                      aggregate=aggregate, doc_count=len(per_doc))


def grid_search(validation, grid, method, k=3, encoder="tfidf",
                embeddings=None, jobs=1, log=None):
    """Evaluate every grid combination on the validation split and return
    (best_config, best_result) under the grid objective.

    Ties go to the lexicographically first combination. For multiround the
    grid must contain a reduction point (alpha1=beta2 and alpha2=beta1) so a
    tuned multiround can never lose to a tuned single-round ranking.
    """
    if method == "multiround" and not grid.has_reduction_point():
        raise ValueError("multiround grid must contain a reduction point "
                         "(alpha1=beta2 and alpha2=beta1)")
    objective = OBJECTIVES[grid.objective]
    best = None
    for a, b1, b2, a1, a2 in grid.combinations():
        config = sm.SummarizerConfig(k=k, a=a, beta1=b1, beta2=b2,
                                     alpha1=a1, alpha2=a2, method=method)
        result = evaluate_method(validation, config, encoder=encoder,
                                 embeddings=embeddings, jobs=jobs)
        value = result.aggregate[objective]["f1"]
        if log is not None:
            log({"a": a, "beta1": b1, "beta2": b2, "alpha1": a1, "alpha2": a2,
                 "objective": grid.objective, "value": value})
        if best is None or value > best[0]:
            best = (value, config, result)
    return best[1], best[2]


def config_to_dict(config):
    return {"k": config.k, "a": config.a, "beta1": config.beta1,
            "beta2": config.beta2, "alpha1": config.alpha1,
            "alpha2": config.alpha2, "method": config.method}


def result_to_dict(result):
    return {
        "method": result.method,
        "config": config_to_dict(result.config),
        "aggregate": {
            "r1": result.aggregate["rouge1"],
            "r2": result.aggregate["rouge2"],
            "rl": result.aggregate["rougeL"],
        },
        "doc_count": result.doc_count,
    }


def compare_report(results):
    """Render a methods-by-metrics table (F1 * 100, one decimal) plus a
    machine-readable copy. Accepts EvalResults or result_to_dict dicts."""
    if not results:
        raise ValueError("compare_report needs at least one result")
    rows = []
    for r in results:
        d = r if isinstance(r, dict) else result_to_dict(r)
        if not d.get("doc_count"):
            raise ValueError("refusing to report a result with no documents")
        rows.append(d)
    lines = ["Method\tR-1\tR-2\tR-L"]
    for d in rows:
        agg = d["aggregate"]
        cells = "\t".join(f"{agg[m]['f1'] * 100:.1f}" for m in ("r1", "r2", "rl"))
        lines.append(f"{d['method']}\t{cells}")
    return "\n".join(lines) + "\n", rows


def dump_result(result, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(result_to_dict(result), fh, sort_keys=True, indent=2)
        fh.write("\n")
