"""Exception types shared across the package.

ValidationError covers bad inputs and violated preconditions (CLI exit 1).
InternalConsistencyError covers invariants the engine itself guarantees;
seeing one means a bug, not a user mistake (CLI exit 2).
"""


class ValidationError(ValueError):
    """A precondition on user-supplied data was violated."""


class BoundError(ValidationError):
    """An enumeration was refused because it exceeds the hard size limits."""


class InternalConsistencyError(RuntimeError):
    """An internal invariant failed; indicates a defect in the engine."""
