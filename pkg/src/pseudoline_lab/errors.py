"""Exception hierarchy.

Every error carries a short machine name (the class name) so the CLI can
report it as JSON. ``UsageError`` subclasses map to exit status 2, the rest
to exit status 1.
"""


class PseudolineError(ValueError):
    """Base class for all errors raised by this package."""

    @property
    def name(self):
        return type(self).__name__


class UsageError(PseudolineError):
    """A precondition on the arguments of an operation failed."""


# seqcore
class NotAPermutation(PseudolineError):
    pass


class FirstNotIdentity(PseudolineError):
    pass


class LastNotReversal(PseudolineError):
    pass


class MoveInferenceFailed(PseudolineError):
    def __init__(self, step, reason=""):
        self.step = step
        msg = f"no valid move at step {step}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)


class SequenceFormatError(PseudolineError):
    pass


# arrangement
class KOutOfRange(UsageError):
    pass


class DeltaViolated(PseudolineError):
    def __init__(self, max_multiplicity, limit):
        self.max_multiplicity = max_multiplicity
        super().__init__(
            f"a crossing has {max_multiplicity} lines, more than delta*n = {limit}"
        )


# sweep
class DuplicateX(PseudolineError):
    def __init__(self, i, j):
        self.pair = (i, j)
        super().__init__(f"points {i} and {j} share an x-coordinate")


class DuplicatePoint(PseudolineError):
    pass


class PointFormatError(PseudolineError):
    pass


# constructions
class OddN(UsageError):
    pass


class NTooSmall(UsageError):
    pass


class DegenerateSweep(PseudolineError):
    pass


class InvariantViolated(PseudolineError):
    pass


# enumeration
class NTooLarge(UsageError):
    pass


# render
class TooManyWires(UsageError):
    pass
