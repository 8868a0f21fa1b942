"""Exception types shared across the package."""


class TsffError(Exception):
    """Base class for all package-specific errors."""


class ArchiveFormatError(TsffError):
    """File is not a trial archive (bad magic or malformed header)."""


class ArchiveCorruptError(TsffError):
    """Archive header is valid but the payload is truncated or inconsistent."""


class UnsupportedVersionError(TsffError):
    """Archive was written by a newer, incompatible format version."""


class SegmentationError(TsffError):
    """A cue window falls outside the continuous recording."""

    def __init__(self, trial_index, message):
        super().__init__(message)
        self.trial_index = trial_index


class ConditioningError(TsffError):
    """Covariance eigenvalues unusable even after regularization."""


class ScaleSupportError(TsffError):
    """A wavelet scale needs more support than the signal provides."""


class EstimatorError(TsffError):
    """A statistical estimator was given too few samples."""


class DivergenceError(TsffError):
    """Training produced a non-finite loss."""

    def __init__(self, epoch, message):
        super().__init__(message)
        self.epoch = epoch


class IncompleteReportError(TsffError):
    """An aggregate report is missing expected subjects."""

    def __init__(self, missing, message):
        super().__init__(message)
        self.missing = list(missing)
