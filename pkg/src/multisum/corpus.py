"""Document model, sentence segmentation, tokenization, JSONL dataset loading."""

import json
import logging
import re
from dataclasses import dataclass, field

from .errors import EmptyInput, FormatError

log = logging.getLogger(__name__)

LATIN = "latin"
CJK = "cjk"
LANGS = (LATIN, CJK)

# terminator followed by whitespace or end of text
_LATIN_BOUNDARY = re.compile(r"[.!?]+(?=\s|$)")
_CJK_TERMINATORS = "。！？；"
_LATIN_WORD = re.compile(r"[^\W_]+", re.UNICODE)

# a candidate sentence shorter than this (in words) is assumed to end at an
# abbreviation and is merged with the following fragment
_MIN_WORDS = 2


@dataclass(frozen=True)
class Sentence:
    index: int
    raw: str
    tokens: tuple


@dataclass(frozen=True)
class Document:
    id: str
    sentences: tuple
    lang: str
    reference_summary: str = None

    @property
    def n(self):
        return len(self.sentences)


@dataclass
class DatasetSplit:
    name: str
    records: list = field(default_factory=list)

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


def segment_sentences(text, lang=LATIN):
    """Split raw text into sentences using rule-based terminator sets."""
    if not text or not text.strip():
        raise EmptyInput("cannot segment empty or whitespace-only text")
    if lang == CJK:
        return _segment_cjk(text)
    return _segment_latin(text)


def _segment_latin(text):
    pieces = []
    start = 0
    for m in _LATIN_BOUNDARY.finditer(text):
        candidate = text[start:m.end()].strip()
        if len(candidate.split()) < _MIN_WORDS:
            continue  # likely an abbreviation; keep accumulating
        pieces.append(candidate)
        start = m.end()
    tail = text[start:].strip()
    if tail:
        pieces.append(tail)
    return pieces if pieces else [text.strip()]


def _segment_cjk(text):
    pieces = []
    buf = []
    for ch in text:
        buf.append(ch)
        if ch in _CJK_TERMINATORS:
            s = "".join(buf).strip()
            if s:
                pieces.append(s)
            buf = []
    tail = "".join(buf).strip()
    if tail:
        pieces.append(tail)
    return pieces


def tokenize(sentence, lang=LATIN):
    """Tokenize one sentence: lowercased words (latin) or code points (cjk)."""
    if lang == CJK:
        tokens = [c for c in sentence if not c.isspace()]
    else:
        tokens = _LATIN_WORD.findall(sentence.lower())
    if not tokens:
        raise EmptyInput(f"no tokens survive in {sentence!r}")
    return tokens


def make_document(doc_id, sentences, lang, reference_summary=None):
    """Build a Document from pre-split sentence strings, tokenizing each."""
    sents = []
    for i, raw in enumerate(sentences):
        raw = raw.strip()
        sents.append(Sentence(index=i, raw=raw, tokens=tuple(tokenize(raw, lang))))
    return Document(id=doc_id, sentences=tuple(sents), lang=lang,
                    reference_summary=reference_summary)


def document_from_text(doc_id, text, lang, reference_summary=None):
    return make_document(doc_id, segment_sentences(text, lang), lang,
                         reference_summary)


def _parse_record(line_no, line, require_summary=True):
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as e:
        raise FormatError(line_no, f"invalid JSON: {e}") from e
    if not isinstance(obj, dict):
        raise FormatError(line_no, "record is not a JSON object")
    for key in ("id", "lang"):
        if key not in obj:
            raise FormatError(line_no, f"missing required field {key!r}")
    if require_summary and not obj.get("summary"):
        raise FormatError(line_no, "missing or empty required field 'summary'")
    lang = obj["lang"]
    if lang not in LANGS:
        raise FormatError(line_no, f"lang must be one of {LANGS}, got {lang!r}")
    has_text = "text" in obj
    has_sents = "sentences" in obj
    if has_text == has_sents:
        raise FormatError(line_no, "exactly one of 'text' or 'sentences' required")
    try:
        if has_sents:
            sentences = obj["sentences"]
            if not isinstance(sentences, list) or not sentences:
                raise FormatError(line_no, "'sentences' must be a non-empty array")
            return make_document(str(obj["id"]), sentences, lang,
                                 obj.get("summary"))
        return document_from_text(str(obj["id"]), obj["text"], lang,
                                  obj.get("summary"))
    except EmptyInput as e:
        raise FormatError(line_no, str(e)) from e


def iter_dataset(path, on_error="raise", require_summary=True):
    """Yield Documents from a JSONL file in file order.

    on_error: "raise" fails on the first malformed line; "skip" logs and
    continues.
    """
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                yield _parse_record(line_no, line, require_summary)
            except FormatError:
                if on_error == "raise":
                    raise
                log.warning("skipping malformed record at %s:%d", path, line_no)


def load_dataset(path, name="test", on_error="raise", require_summary=True):
    """Load a JSONL dataset into a DatasetSplit, preserving record order."""
    records = list(iter_dataset(path, on_error=on_error,
                                require_summary=require_summary))
    if not records:
        log.warning("dataset %s contains no records", path)
    return DatasetSplit(name=name, records=records)
