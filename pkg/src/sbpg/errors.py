class ConfigurationError(ValueError):
    """Invalid or inconsistent configuration (dimensions, files, parameters)."""


class PolicyNotReadyError(RuntimeError):
    """Exploitation was requested from a map with no visited cells."""
