"""Exception types shared across modules."""


class PreconditionError(ValueError):
    """Input violates a stated precondition (maps to CLI exit code 2)."""


class ConsistencyError(RuntimeError):
    """Two independent computations disagree.  Always a bug."""
