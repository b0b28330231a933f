# Exception hierarchy for the beam-splitter entanglement toolkit


class BeamSplitterError(Exception):
    """Base class for every error raised by this package"""


class PreconditionError(BeamSplitterError, ValueError):
    """Invalid parameters, cutoff overflow or an unsupported decomposition domain"""


class NormalizationError(BeamSplitterError):
    """State norm deviates from one by more than the allowed tolerance"""


class UnphysicalStateError(BeamSplitterError):
    """Covariance matrix violates positivity or the uncertainty bound"""


class TruncationError(BeamSplitterError):
    """Truncated Fock representation loses more weight than the trace guard allows"""


class NumericalGuardError(BeamSplitterError):
    """A numerical routine could not reach its tolerance or left its valid domain"""


class StandardFormDegenerate(BeamSplitterError):
    """Uncorrelated product or vacuum-like marginals; trivially separable"""

    def __init__(self, message, form=None, transform=None):
        super().__init__(message)
        self.form = form
        self.transform = transform
