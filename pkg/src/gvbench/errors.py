"""Exception types shared across the package."""


class ParameterError(ValueError):
    """An argument is outside its documented domain."""


class UnsupportedInputError(ValueError):
    """The input is well formed but the operation does not apply to it."""


class ClassificationError(ValueError):
    """A graph component does not belong to any recognized shape."""


class GenerationError(RuntimeError):
    """Dataset generation failed an internal consistency check."""


class ConfigError(ValueError):
    """A configuration file or endpoint description is invalid."""
