"""Exception types shared across the package."""


class GaugeDegenerateError(ValueError):
    """Raised when the gauge decay rate is (numerically) zero and the
    exponential-gauge recursions would divide by it."""


class NoRealRootError(RuntimeError):
    """Raised when the truncated boundary-condition polynomial has no real
    root below the requested residual tolerance."""


class AmbiguousRootError(RuntimeError):
    """Raised when several real candidate roots have comparable magnitude and
    no principled selection is possible."""

    def __init__(self, roots):
        self.roots = list(roots)
        super().__init__(f"ambiguous real roots: {self.roots}")


class QuadratureError(RuntimeError):
    """Raised when adaptive quadrature cannot meet the requested tolerance."""
