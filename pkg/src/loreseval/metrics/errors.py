"""Exceptions shared by the metric implementations."""


class MetricError(Exception):
    """Base class for metric failures."""


class LengthMismatch(MetricError):
    """Hypothesis and reference lists differ in length."""

    def __init__(self, n_hyp: int, n_ref: int):
        super().__init__(f"{n_hyp} hypotheses vs {n_ref} references")
        self.n_hyp = n_hyp
        self.n_ref = n_ref


class EmptyInput(MetricError):
    """A segment or segment list required to be non-empty was empty."""


class EmptyReference(MetricError):
    """The reference holds no tokens, so an edit rate is undefined."""


class ZeroBaseline(MetricError):
    """Relative improvement needs a strictly positive baseline."""
