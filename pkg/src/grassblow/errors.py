"""Exception types shared across modules."""


class ParamError(ValueError):
    """Invalid parameters (out of range index, bad shape, ...)."""


class DomainError(ValueError):
    """Point outside the domain of a rational map."""


class CrossCheckError(RuntimeError):
    """Two independent computations of the same quantity disagree.

    Indicates a transcription bug in a table; the CLI maps it to exit code 2.
    """
