"""Exception types shared across the package."""


class MultisumError(Exception):
    """Base class for all package errors."""


class EmptyInput(MultisumError):
    """Raised when text or a token stream is empty after cleaning."""


class EmptyCorpus(MultisumError):
    """Raised when a tf-idf fit is attempted on an empty corpus."""


class EmptySplit(MultisumError):
    """Raised when evaluation is requested on a split with no documents."""


class FormatError(MultisumError):
    """Malformed dataset or embedding line.

    Carries the 1-based line number and a human-readable reason.
    """

    def __init__(self, line_no, reason):
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"line {line_no}: {reason}")


class MissingDocument(MultisumError):
    """Embedding file has no entry for the requested document id."""

    def __init__(self, doc_id):
        self.doc_id = doc_id
        super().__init__(f"no embedding entry for document {doc_id!r}")


class MissingEmbeddings(MultisumError):
    """External encoder selected but no embeddings available for a document."""


class DimensionMismatch(MultisumError):
    """Vector counts or dimensions disagree."""


class TooFewSentences(MultisumError):
    """A similarity graph needs at least two sentences."""


class OutOfRange(MultisumError):
    """A numeric parameter is outside its allowed interval."""


class AlreadyDampened(MultisumError):
    """Internal consistency violation: edges of a sentence dampened twice."""
