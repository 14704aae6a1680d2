"""Exception types shared across the toolkit."""


class GbError(Exception):
    """Base class for every error raised by this package."""


class MismatchedArityError(GbError):
    """Polynomials from rings with different variable counts were combined."""


class ZeroPolynomialError(GbError):
    """An operation that needs a leading term was given the zero polynomial."""


class LengthMismatchError(GbError):
    """Certificate list lengths are structurally inconsistent."""


class BudgetExceededError(GbError):
    """A configured work limit (pair budget, exponent budget) was hit."""


class ExponentBudgetError(BudgetExceededError):
    """Radical membership is established, but no witness exponent fit the budget."""


class MalformedJsonError(GbError):
    """Input JSON does not match the wire schema."""


class VariableOutOfRangeError(MalformedJsonError):
    """A serialized monomial references a variable index >= nvars."""


class ZeroDenominatorError(MalformedJsonError):
    """A serialized rational has denominator zero."""


class UnknownTaskError(MalformedJsonError):
    """The task descriptor names an unrecognized operation."""


class UnsupportedOrderError(MalformedJsonError):
    """The task requests a monomial order other than lex."""


class UnsupportedBackendError(GbError):
    """The selected backend is a stub or is not configured."""


class OracleSpawnFailureError(GbError):
    """The external oracle process could not be started."""


class OracleTimeoutError(GbError):
    """The external oracle did not answer within the configured timeout."""


class MalformedOracleOutputError(GbError):
    """The external oracle produced output that is not a result envelope."""


class CertificateRejectedError(GbError):
    """A certificate failed verification by the trusted checker."""
