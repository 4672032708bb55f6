"""Exception types shared across the package."""


class GradedK0Error(Exception):
    """Base class for package-specific errors."""


class InternalCheckError(GradedK0Error):
    """An internal exact identity failed; indicates a bug, never bad input."""


class JobSyntaxError(GradedK0Error):
    """Job input is not syntactically well-formed."""


class JobValidationError(GradedK0Error):
    """Job input parsed but failed cross-validation."""
