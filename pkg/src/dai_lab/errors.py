"""Exception types shared across the package."""


class ContractViolation(ValueError):
    """An argument broke a documented precondition (shape, range, or state)."""


class InsufficientSamples(RuntimeError):
    """A replay buffer was asked for more samples than it holds."""


class CheckpointError(RuntimeError):
    """A checkpoint/demo/trajectory file is incompatible or corrupted."""


class TrainingAborted(RuntimeError):
    """Training hit a non-finite quantity; the message carries diagnostics."""
