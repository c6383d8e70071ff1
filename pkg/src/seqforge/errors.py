"""Typed errors shared across the toolkit.

Every error raised on bad input derives from :class:`SeqForgeError`, so
callers (and the CLI exit-code mapping) can distinguish input/format
problems, numerical failures and internal invariant violations.
"""


class SeqForgeError(Exception):
    """Base class for all toolkit errors."""


class FormatError(SeqForgeError):
    """Malformed or invalid input data (CLI exit code 2)."""


class NumericalError(SeqForgeError):
    """Numerical failure such as a diverged optimisation (CLI exit code 3)."""


class InternalError(SeqForgeError):
    """Broken internal invariant (CLI exit code 4)."""


# --- seqio ---------------------------------------------------------------

class MalformedRecord(FormatError):
    """FASTQ record structure is broken (line count, '+' line, lengths)."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidCharacter(FormatError):
    """Base outside {A,C,G,T,N} or quality character out of range."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class QualityOutOfRange(FormatError):
    """Phred score not encodable under the Phred+33, Q <= 60 policy."""


class HeaderMismatch(FormatError):
    """Variant table header does not match the published schema."""


class RowArity(FormatError):
    """Variant table row has the wrong number of columns."""


class NonNumericFeature(FormatError):
    """Variant table feature cell failed to parse as a float."""


# --- simkit --------------------------------------------------------------

class BadFraction(FormatError):
    """A fraction-valued parameter fell outside [0, 1]."""


class MissingContaminant(FormatError):
    """Contamination weight is positive but no contaminant source given."""


class Overcrowded(FormatError):
    """Requested variants cannot be placed without overlap."""


# --- denoise -------------------------------------------------------------

class ShapeError(FormatError):
    """Tensor shape does not match what the operation requires."""


class TruthMismatch(FormatError):
    """A corruption ledger references reads that are not present."""


class DivergedLoss(NumericalError):
    """Training loss became non-finite."""


# --- eval ----------------------------------------------------------------

class EmptyInput(FormatError):
    """Metric called on an empty read set or score list."""


class LedgerMismatch(FormatError):
    """Ledger and read sets do not describe the same reads."""


class OneClassOnly(FormatError):
    """Both classes are required but only one is present."""


class DegenerateVariance(FormatError):
    """Correlation undefined because a variable has zero variance."""


class InvalidCounts(FormatError):
    """Hypergeometric counts are inconsistent (k > K, n > N, ...)."""


# --- varfeat / ensemble --------------------------------------------------

class BadCorrelation(FormatError):
    """Requested feature correlation |r| >= 1."""


class IndexOutOfRange(FormatError):
    """Feature slot index outside the schema."""


class TooFewFeatures(FormatError):
    """Selection target is larger than the available feature count."""


class TooFewMinority(FormatError):
    """Minority class too small for the requested oversampling."""


class TooFewRows(FormatError):
    """Not enough rows for the requested cross-validation split."""


class MaskMismatch(FormatError):
    """Component models were trained on different feature masks."""


class ConfigError(FormatError):
    """Pipeline configuration file is invalid (unknown key, bad value)."""
