"""Exception hierarchy shared by all modules."""


class FCAError(Exception):
    """Base class for domain errors raised by trifca."""


class InvalidInputError(FCAError, ValueError):
    """An argument references unknown roster entries or mixes contexts."""


class CapacityError(FCAError):
    """A brute-force routine was asked to exceed its size guard."""


class InconsistentInputError(FCAError):
    """Precomputed data handed to a transfer routine does not match the context."""


class ParseError(FCAError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
