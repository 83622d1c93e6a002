"""Exception types shared across the package."""


class AbfluxError(Exception):
    """Base class for all package errors."""


class ParameterError(AbfluxError):
    """A physical or numerical parameter is outside its admissible domain."""


class ConfigError(AbfluxError):
    """Configuration text failed validation.

    ``problems`` carries every detected violation, not just the first.
    """

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class InstabilityError(AbfluxError):
    """The time integration left the stable regime (norm drift or NaN)."""


class SnapshotFormatError(AbfluxError):
    """A snapshot file is truncated, corrupt, or has the wrong magic/version."""
