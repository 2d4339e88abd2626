"""ROUGE-1/2/L scoring, including the code-point transform used for
Chinese-text evaluation."""

from collections import Counter
from dataclasses import dataclass

from .corpus import CJK, segment_sentences, tokenize
from .errors import EmptyInput

VARIANTS = ("rouge1", "rouge2", "rougeL")


@dataclass(frozen=True)
class RougeScore:
    precision: float
    recall: float
    f1: float
    variant: str


def _f1(p, r):
    return 2 * p * r / (p + r) if p + r > 0 else 0.0


def _ngrams(tokens, n):
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def _overlap_score(cand, ref, n):
    match = sum(min(c, ref[g]) for g, c in cand.items())
    cand_total = sum(cand.values())
    ref_total = sum(ref.values())
    p = match / cand_total if cand_total else 0.0
    r = match / ref_total if ref_total else 0.0
    return RougeScore(p, r, _f1(p, r), f"rouge{n}")


def rouge_n(candidate, reference, n=1):
    """Clipped n-gram overlap between candidate and reference token lists."""
    return _overlap_score(_ngrams(candidate, n), _ngrams(reference, n), n)


def _lcs_length(xs, ys):
    # one-row DP
    prev = [0] * (len(ys) + 1)
    for x in xs:
        cur = [0]
        for j, y in enumerate(ys, start=1):
            cur.append(prev[j - 1] + 1 if x == y else max(prev[j], cur[j - 1]))
        prev = cur
    return prev[-1]


def rouge_l(candidate, reference):
    """Longest-common-subsequence recall/precision/F1 over token lists."""
    if not candidate or not reference:
        return RougeScore(0.0, 0.0, 0.0, "rougeL")
    lcs = _lcs_length(candidate, reference)
    p = lcs / len(candidate)
    r = lcs / len(reference)
    return RougeScore(p, r, _f1(p, r), "rougeL")


def to_unicode_tokens(text):
    """One token per non-whitespace code point, rendered as U+XXXX."""
    return [f"U+{ord(c):04X}" for c in text if not c.isspace()]


def _summary_tokens(sentences, lang):
    """Per-sentence token lists for ROUGE. cjk uses code-point tokens."""
    out = []
    for s in sentences:
        if lang == CJK:
            toks = to_unicode_tokens(s)
        else:
            try:
                toks = tokenize(s, lang)
            except EmptyInput:
                toks = []
        if toks:
            out.append(toks)
    return out

def score_records(doc_id, scores):
    """Flatten a {variant: RougeScore} map into JSON-ready records."""
    return [{"doc_id": doc_id, "variant": s.variant, "precision": s.precision,
             "recall": s.recall, "f1": s.f1}
            for s in (scores[v] for v in VARIANTS)]


def _sentence_ngrams(per_sentence, n):
    # summing per-sentence counters blocks n-grams from crossing sentence
    # boundaries without polluting the gram totals
    counts = Counter()
    for toks in per_sentence:
        counts.update(_ngrams(toks, n))
    return counts


def score_summary(candidate_sentences, reference_text, lang):
    """Score a multi-sentence candidate against a reference summary string.

    For ROUGE-1/2, n-grams are counted within each sentence so they never
    cross sentence boundaries; ROUGE-L runs on the flattened sequences.
    Returns {variant: RougeScore}.
    """
    cand = _summary_tokens(candidate_sentences, lang)
    try:
        ref_sents = segment_sentences(reference_text, lang)
    except EmptyInput:
        ref_sents = []
    ref = _summary_tokens(ref_sents, lang)
    cand_flat = [t for toks in cand for t in toks]
    ref_flat = [t for toks in ref for t in toks]
    return {
        "rouge1": rouge_n(cand_flat, ref_flat, 1),
        "rouge2": _overlap_score(_sentence_ngrams(cand, 2),
                                 _sentence_ngrams(ref, 2), 2),
        "rougeL": rouge_l(cand_flat, ref_flat),
    }
