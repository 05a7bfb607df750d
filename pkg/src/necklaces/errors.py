"""Exception types shared across the package."""


class GroupSpecError(ValueError):
    """Malformed group or subset spec string."""


class BudgetExceeded(RuntimeError):
    """An enumeration or construction would exceed its configured bound."""

    def __init__(self, what, size, bound):
        self.what = what
        self.size = size
        self.bound = bound
        super().__init__(f"{what}: size {size} exceeds bound {bound}")


class IntegralityError(ArithmeticError):
    """A divisor sum that must be divisible by its denominator was not.

    This never indicates bad input; it means a counting routine is broken.
    """


class ConjugationClosureError(ValueError):
    """Subset not closed under conjugation; carries a witness pair."""

    def __init__(self, g, k, image):
        self.g = g
        self.k = k
        self.image = image
        super().__init__(
            f"not closed under conjugation: g={g}, k={k}, g*k*g^-1={image} not in subset")


class OracleMismatch(AssertionError):
    """Two independent routes to the same quantity disagreed."""
