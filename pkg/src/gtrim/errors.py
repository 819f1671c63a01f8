"""Errors for violated mathematical preconditions.

The CLI maps PreconditionError (and subclasses) to exit code 3; plain
argument problems stay with argparse's exit code 2.
"""

from __future__ import annotations


class PreconditionError(ValueError):
    """A mathematical precondition does not hold for the given input."""


class NonHomogeneousError(PreconditionError):
    """A generator is not homogeneous; only graded input is supported."""


class NotNPrimaryError(PreconditionError):
    """The quotient is not artinian: some variable has no pure power leading term."""


class ClassificationScopeError(PreconditionError):
    """The ideal has a degree-1 minimal generator, outside the classification's scope."""
