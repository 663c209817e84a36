"""Exception hierarchy. Every error carries the CLI exit code it maps to."""


class BgeScoreError(Exception):
    exit_code = 1


class ParseError(BgeScoreError):
    exit_code = 2

    def __init__(self, message: str, row: int | None = None, column: str | None = None):
        location = []
        if row is not None:
            location.append(f"row {row}")
        if column is not None:
            location.append(f"column '{column}'")
        if location:
            message = f"{message} ({', '.join(location)})"
        super().__init__(message)
        self.row = row
        self.column = column


class EmptyData(BgeScoreError):
    exit_code = 2


class NameMismatch(BgeScoreError):
    exit_code = 3

    def __init__(self, name: str):
        super().__init__(f"Unknown variable name: '{name}'")
        self.name = name


class DimensionMismatch(BgeScoreError):
    exit_code = 3


class ConfigError(BgeScoreError):
    exit_code = 4


class NotPositiveDefinite(BgeScoreError, ValueError):
    pass


class DomainError(BgeScoreError, ValueError):
    pass


class InvalidFamily(BgeScoreError, ValueError):
    pass


class CyclicGraph(BgeScoreError):
    pass


class IllegalMove(BgeScoreError):
    pass


class UsageError(BgeScoreError):
    """Invalid combination of command-line or config-file settings."""
    exit_code = 2
