"""Sentence vectors: built-in tf-idf encoder and external embedding loader."""

import json
import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, EmptyCorpus, FormatError, MissingDocument

PER_DOCUMENT = "per-document"
PER_CORPUS = "per-corpus"


@dataclass(frozen=True)
class TfIdfModel:
    vocabulary: dict  # term -> dense column index
    idf: np.ndarray   # aligned with vocabulary indices
    doc_count: int


def fit_tfidf(corpus, scope=PER_DOCUMENT):
    """Fit idf weights over a list of Documents.

    Under per-document scope each sentence counts as one idf unit, so the
    usual call is fit_tfidf([doc]) per document; per-corpus scope uses whole
    documents as units.
    """
    if not corpus:
        raise EmptyCorpus("fit_tfidf needs at least one document")
    if scope == PER_CORPUS:
        units = [[t for s in doc.sentences for t in s.tokens] for doc in corpus]
    else:
        units = [list(s.tokens) for doc in corpus for s in doc.sentences]
    if not units:
        raise EmptyCorpus("corpus has no sentences")
    n = len(units)
    df = Counter()
    for unit in units:
        df.update(set(unit))
    vocabulary = {term: i for i, term in enumerate(sorted(df))}
    idf = np.empty(len(vocabulary))
    for term, i in vocabulary.items():
        idf[i] = math.log((1 + n) / (1 + df[term])) + 1.0
    return TfIdfModel(vocabulary=vocabulary, idf=idf, doc_count=n)


def encode_tfidf(model, doc, normalize=True):
    """Encode each sentence of doc as a tf·idf row vector, shape (n, |V|).

    Nonzero rows are L2-normalized unless normalize=False; out-of-vocabulary
    terms contribute nothing.
    """
    vocab = model.vocabulary
    mat = np.zeros((len(doc.sentences), len(vocab)))
    for row, sent in enumerate(doc.sentences):
        for term, count in Counter(sent.tokens).items():
            col = vocab.get(term)
            if col is not None:
                mat[row, col] = count * model.idf[col]
    if normalize:
        norms = np.linalg.norm(mat, axis=1, keepdims=True)
        np.divide(mat, norms, out=mat, where=norms > 0)
    return mat


def load_embedding_file(path):
    """Parse an embedding JSONL file into {doc_id: (n, dim) array}."""
    table = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as e:
                raise FormatError(line_no, f"invalid JSON: {e}") from e
            if not isinstance(obj, dict) or "id" not in obj or "vectors" not in obj:
                raise FormatError(line_no, "entry needs 'id' and 'vectors'")
            vectors = obj["vectors"]
            if not vectors:
                raise FormatError(line_no, "'vectors' is empty")
            dims = {len(v) for v in vectors}
            if len(dims) != 1:
                raise DimensionMismatch(
                    f"line {line_no}: ragged vector dims {sorted(dims)}")
            declared = obj.get("dim")
            if declared is not None and declared != dims.pop():
                raise DimensionMismatch(
                    f"line {line_no}: declared dim {declared} != actual")
            arr = np.asarray(vectors, dtype=float)
            if not np.isfinite(arr).all():
                raise FormatError(line_no, "non-finite vector entries")
            table[str(obj["id"])] = arr
    return table


def load_external_embeddings(path, doc):
    """Load precomputed sentence vectors for one document.

    Returns an (n, dim) array with one row per sentence in sentence order.
    """
    table = load_embedding_file(path)
    if doc.id not in table:
        raise MissingDocument(doc.id)
    arr = table[doc.id]
    if arr.shape[0] != len(doc.sentences):
        raise DimensionMismatch(
            f"document {doc.id!r} has {len(doc.sentences)} sentences "
            f"but {arr.shape[0]} vectors were provided")
    return arr
