"""Exception hierarchy shared across the package.

All errors raised on bad caller input derive from ValueError so that callers
who do not care about the distinction can catch one base class.
"""


class DomainError(ValueError):
    """A parameter is outside the domain a family or operation supports."""


class ContractViolationError(ValueError):
    """An input breaks a documented precondition (lengths, bijections, ...)."""


class FormatError(ValueError):
    """A file could not be parsed.  Carries an optional line number."""

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        loc = ""
        if path is not None:
            loc = f"{path}: "
        if line is not None:
            loc += f"line {line}: "
        super().__init__(loc + message)
        self.path = path
        self.line = line


class InternalLogicError(RuntimeError):
    """A case that is provably unreachable was reached; always a bug."""
