"""Exception types shared across modules."""


class OrigamiError(ValueError):
    """Base class for invalid input to any origami_lab routine."""


class NotBijection(OrigamiError):
    pass


class NotConnected(OrigamiError):
    pass


class NotSubgroup(OrigamiError):
    pass


class NotFreeOnSquares(OrigamiError):
    pass


class NotClosed(OrigamiError):
    pass


class RelationViolated(OrigamiError):
    pass


class OffCurve(OrigamiError):
    pass


class RootFindingDiverged(ArithmeticError):
    pass


class ConvergenceBudgetExceeded(ArithmeticError):
    pass


class TwoTorsionInput(OrigamiError):
    """Raised when a point of order dividing 2 is passed where it is excluded."""


class DegenerateLambda(OrigamiError):
    pass


class WrongCase(OrigamiError):
    pass


class Disconnected(OrigamiError):
    pass


class UniquenessViolated(AssertionError):
    """More or fewer than one double cover satisfied the rotation conditions."""
