"""Exception taxonomy shared by the library and the CLI exit codes."""

from __future__ import annotations


class VerificationError(Exception):
    """A mechanically checked identity failed.

    Raised when independent computation routes disagree, or when a claim that
    holds for every valid input fails at one: that always points at a bug (or
    a wrong input slipping past the preconditions), never at normal operation.
    The computed values involved are attached for post-mortems.
    """

    def __init__(self, message: str, **values: object):
        super().__init__(message)
        self.values = values


class HypothesisError(Exception):
    """An input-side hypothesis does not hold.

    Distinct from VerificationError: the claim under test was never reached
    because its premise failed (e.g. a progression whose ordinary partition
    values are not all divisible by the stated modulus).
    """

    def __init__(self, message: str, **values: object):
        super().__init__(message)
        self.values = values
