"""Exception types shared across modules."""


class GuardError(ValueError):
    """An exhaustive oracle was asked to exceed its size guard."""


class ConfigError(ValueError):
    """Invalid generator or benchmark configuration."""
