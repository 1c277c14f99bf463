"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input value violates a documented invariant.

    The message names the first violated invariant and includes the
    measured value.
    """


class ConsistencyError(RuntimeError):
    """Two internally redundant computations disagree beyond tolerance."""
