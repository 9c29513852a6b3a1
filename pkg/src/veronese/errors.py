class VeroneseError(Exception):
    """Base class for all library errors."""

    exit_code = 3


class InvalidInput(VeroneseError, ValueError):
    exit_code = 3


class FieldError(InvalidInput):
    pass


class GuardExceeded(VeroneseError):
    """A computation would exceed a configured size guard."""

    exit_code = 2

    def __init__(self, message, suggestion=None):
        super().__init__(message if suggestion is None else f"{message} (try: {suggestion})")
        self.suggestion = suggestion


class SolveError(VeroneseError):
    """Singular, inconsistent, non-integral or negative linear solve."""

    exit_code = 1

    def __init__(self, message, equation=None):
        super().__init__(message if equation is None else f"{message} [equation {equation}]")
        self.equation = equation


class VerificationError(VeroneseError):
    exit_code = 1
