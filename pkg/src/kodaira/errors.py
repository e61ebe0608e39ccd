"""Exception types shared across the package."""


class InsufficientPrecision(ArithmeticError):
    """A truncated p-adic value does not carry enough digits to decide the question."""


class UnsupportedResidueCharacteristic(ValueError):
    """Raised for places of residue characteristic 2 or 3; these are out of scope."""


class SingularModelError(ValueError):
    """A Weierstrass model with vanishing discriminant was used where a curve is required."""


class DegenerateParameters(ValueError):
    """Parameter values land on the degenerate locus of a family."""


class OrderBoundExceeded(RuntimeError):
    """Repeated addition passed the order search bound without reaching the identity."""
