"""Exception hierarchy shared by every module."""


class RamifyError(Exception):
    """Base class for domain errors."""


class InvalidArgument(RamifyError, ValueError):
    """Malformed input; the CLI treats it as a usage error."""


class PolySyntaxError(InvalidArgument):
    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class ReduciblePolynomial(RamifyError):
    pass


class WildRamificationError(RamifyError):
    def __init__(self, p, detail=""):
        msg = "wild ramification: Theorem hypotheses not met"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.p = p


class UndefinedInvariant(RamifyError):
    pass


class InternalConsistencyError(RuntimeError):
    """Two independent routes disagreed; always a bug, never bad input."""
