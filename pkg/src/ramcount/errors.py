"""Shared exception types."""


class GroupError(ValueError):
    """Invalid group data: broken axioms, bad spec, closure overflow."""


class TheoremViolation(RuntimeError):
    """An exactly verified structural fact failed on concrete input.

    Raised when a computation contradicts a property that is supposed to
    hold for every valid input (for example a singular conductor matrix,
    or a mass formula disagreeing with its brute-force count).
    """
