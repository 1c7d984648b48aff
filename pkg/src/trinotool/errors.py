"""Exception hierarchy shared by all trinotool modules."""


class TrinotoolError(Exception):
    """Base class for all domain errors raised by this package."""


class NonIntegerCoefficient(TrinotoolError):
    """A coefficient required to be an integer is not one."""


class NotRepresentable(TrinotoolError):
    """(n, m, a, b) cannot be rewritten as any of the R/S/T family forms."""


class ConvergenceFailure(TrinotoolError):
    """Root iteration hit its cap without certifying the roots.

    Carries the best iterate so callers can inspect it.
    """

    def __init__(self, message, roots=None, residual_bound=None):
        super().__init__(message)
        self.roots = roots
        self.residual_bound = residual_bound


class ClassificationMismatch(TrinotoolError):
    """Real-root bisection found a different count than the case analysis predicts."""


class QuadratureBudgetExceeded(TrinotoolError):
    """Adaptive quadrature exhausted its evaluation budget before the tolerance.

    ``value`` and ``error`` hold the best available estimate.
    """

    def __init__(self, message, value=None, error=None):
        super().__init__(message)
        self.value = value
        self.error = error


class CoprimalityViolated(TrinotoolError):
    """gcd(m, n) = 1 is required by the operation but does not hold."""


class DominanceViolated(TrinotoolError):
    """The series expansion requires |a| - |b| >= 1."""


class DivergenceDetected(TrinotoolError):
    """Series terms stopped decaying; no value is returned."""


class GcdNotOne(TrinotoolError):
    """gcd of the three trinomial coefficients must be 1."""


class ParityViolated(TrinotoolError):
    """Family form parity constraints (R: m odd/n even, S: n odd) do not hold."""


class InternalVerificationFailure(TrinotoolError):
    """Re-expansion of a factorization did not reproduce the input (bug trap)."""
