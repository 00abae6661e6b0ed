"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PrecisionError(DomainError):
    """A modulus or angle falls in a range where double precision degrades.

    Moduli are accepted only in (1e-8, 1 - 1e-8) at the public entry
    points of the higher-level modules; K(ell') diverges logarithmically
    and the Landen recursion loses accuracy outside that window.
    """


class ConvergenceError(RuntimeError):
    """An iteration failed to reach its tolerance within its budget."""


class PoleError(ZeroDivisionError):
    """Evaluation hit a pole of a factored rational.

    ``factor_index`` identifies the offending factor (``-1`` means the
    explicit power of z).
    """

    def __init__(self, message: str, factor_index: int):
        super().__init__(message)
        self.factor_index = factor_index


class BranchError(ValueError):
    """No admissible branch exists (e.g. no unit-circle preimage)."""


class ResolutionError(RuntimeError):
    """A sampling grid is too coarse to certify an equioscillation count."""
