"""Exception types raised across the package."""


class NotDivisible(ArithmeticError):
    """Exact division left a nonzero remainder."""


class DivisionByZero(ZeroDivisionError):
    pass


class ZeroDenominator(ZeroDivisionError):
    """A negative power was evaluated at zero."""


class NonInvertibleImage(ValueError):
    """A variable with a negative exponent was sent to a non-monomial."""


class InvalidShape(ValueError):
    pass


class MissingSeed(ValueError):
    pass


class InconsistentFrieze(ArithmeticError):
    """Propagated labels violate a gluing or boundary condition."""


class DegenerateSample(ArithmeticError):
    """A random sample hit a zero denominator during propagation."""


class DimensionMismatch(ValueError):
    pass


class InadmissibleInstance(ValueError):
    """Multiplication-formula hypotheses are not satisfied."""


class NoExtension(ValueError):
    """The extension space between the two modules is zero."""
