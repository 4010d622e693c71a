"""Exception types shared across the library.

Every error raised by this package derives from LsaClusterError so callers
can catch the whole family with one clause.
"""


class LsaClusterError(Exception):
    """Base class for all errors raised by this package."""


class EmptyDocument(LsaClusterError):
    """Document contains no Arabic tokens after normalization."""


class NonFiniteInput(LsaClusterError):
    """Matrix entries contain NaN or infinity."""


class DimensionMismatch(LsaClusterError):
    """Matrix shapes are incompatible for the requested operation."""


class EmptyInput(LsaClusterError):
    """An operation that needs at least one item received none."""


class DegenerateMatrix(LsaClusterError):
    """Term-by-sentence matrix carries no usable signal (all zero)."""


class IndexOutOfRange(LsaClusterError):
    """A sentence index does not exist in the source document."""


class EmptyCorpus(LsaClusterError):
    """Vocabulary construction received no documents."""


class ZeroVector(LsaClusterError):
    """A measure that needs nonzero mass received a zero vector."""


class DegenerateVariance(LsaClusterError):
    """Pearson correlation is undefined for constant vectors."""


class OutOfRange(LsaClusterError):
    """Raw measure value lies outside the range valid for its kind."""


class TooFewDocuments(LsaClusterError):
    """Fewer documents than requested clusters."""


class ZeroVocabulary(LsaClusterError):
    """Clustering requires a nonempty vocabulary."""


class EmptyCluster(LsaClusterError):
    """Quality metrics are undefined for an empty cluster."""


class MissingRoot(LsaClusterError):
    """Corpus root directory does not exist."""


class UnreadableFile(LsaClusterError):
    """Corpus file could not be decoded as UTF-8."""


class InvalidCorpus(LsaClusterError):
    """Corpus layout cannot support the requested run."""


class ConfigError(LsaClusterError):
    """Experiment configuration is malformed."""
