"""Exception types shared across the package."""


class HoneyAuthError(Exception):
    """Base class for all honeyauth-specific errors."""


class SchemaError(HoneyAuthError):
    """CSV header or column layout does not match the expected schema."""


class ParseError(HoneyAuthError):
    """A cell could not be parsed; message carries row and column."""


class ValidationError(HoneyAuthError):
    """Data violates a hard constraint (e.g. negative concentration)."""


class DecodeError(HoneyAuthError):
    """A model or report document is malformed or has an unknown version."""


class TrainingError(HoneyAuthError):
    """Model training could not proceed (e.g. a class missing from a fold)."""
