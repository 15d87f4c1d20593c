"""Exception types shared across the package."""


class SchottkyGaugeError(Exception):
    """Base class for all package errors."""


class DomainError(SchottkyGaugeError):
    """A formula was evaluated outside its geometric domain.

    Raised instead of clamping: an arccosh argument below 1 means the
    corresponding hyperbolic configuration does not exist, and the caller
    decides whether that makes a constraint vacuous.
    """


class HypothesisNotSatisfied(SchottkyGaugeError):
    """A lemma's hypothesis flag is absent, so it yields no bound."""


class ValidationError(SchottkyGaugeError):
    """Base class for Gram-matrix validation failures.

    ``name`` is the stable identifier surfaced by the CLI on exit code 3.
    """

    name = "ValidationError"

    def __str__(self):  # pragma: no cover - trivial
        return f"{self.name}: {super().__str__()}"


class NotSymmetric(ValidationError):
    name = "NotSymmetric"


class NotPositiveDefinite(ValidationError):
    name = "NotPositiveDefinite"


class OddDimension(ValidationError):
    name = "OddDimension"


class DeterminantNotOne(ValidationError):
    name = "DeterminantNotOne"


class NumericalBreakdown(SchottkyGaugeError):
    """Lattice reduction failed to converge within its swap budget."""


class BudgetExceeded(SchottkyGaugeError):
    """Enumeration or certification exceeded its configured node budget."""


class IncompleteMinima(SchottkyGaugeError):
    """An operation needed minima for k = dim but received fewer."""
