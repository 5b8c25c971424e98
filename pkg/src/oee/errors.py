"""Exception types shared across the engine."""

from __future__ import annotations


class EngineError(Exception):
    """Base class for all engine errors."""


class InvalidStateSet(EngineError):
    """State set has fewer than two states or duplicate states."""


class ConflictingAssignment(EngineError):
    """A concretisation parameter was reassigned with a different value."""


class NotActual(EngineError):
    """Operation requires a fully concretised model in the actual regime."""


class InvalidRule(EngineError):
    """Rule violates an invariant (empty/duplicate inputs, self-output, range)."""


class AdaptationError(EngineError):
    """Adaptation cannot run (negative rule count, no usable schema)."""


class UnknownReference(EngineError):
    """An event references a rule or schema id that does not exist."""


class TickRegression(EngineError):
    """Ledger append with a tick smaller than the last recorded tick."""


class LogError(EngineError):
    """Event log is corrupt, gapped, or inconsistent with the state it replays."""


class ShortSeries(EngineError):
    """Series is shorter than the requested window or horizon."""


class TooFewTailSamples(EngineError):
    """Not enough samples at or above the fitting cutoff."""


class DegenerateTail(EngineError):
    """All tail samples are equal; the tail exponent is not identifiable."""


class ConfigError(EngineError):
    """Invalid run configuration or command usage (CLI exit code 2)."""


class VerifyError(EngineError):
    """Digest or replay verification failed (CLI exit code 1)."""
