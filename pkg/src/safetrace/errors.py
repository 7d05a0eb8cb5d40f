"""Exception types shared across the package."""


class SafetraceError(Exception):
    """Base class for all package-specific errors."""


class ConfigurationError(SafetraceError, ValueError):
    """Invalid environment, constraint, or training configuration."""


class TrainingError(SafetraceError, RuntimeError):
    """Training cannot proceed (degenerate dataset, non-finite loss)."""


class EmptyBufferError(SafetraceError, RuntimeError):
    """Sampling was requested from an empty replay buffer."""


class CheckpointError(SafetraceError, RuntimeError):
    """A checkpoint file is missing fields or has an unsupported version."""
