"""Exception types shared across the library.

Every computational error has its own class so callers (and the CLI) can
report the failure by name instead of pattern-matching messages.
"""


class HeckeDivError(Exception):
    """Base class for all library errors."""


class NonUnitLeading(HeckeDivError):
    """Division (or log-derivative) by a series whose leading term is zero."""


class PrecisionExhausted(HeckeDivError):
    """An operation would leave fewer than one known coefficient."""


class NotIntegralSeries(HeckeDivError):
    """A series expected to live in Q[[q]] has fractional-exponent or
    irrational content."""


class UnsupportedWeight(HeckeDivError):
    """Eisenstein weight outside the supported range (even, >= 4)."""


class UnsupportedWeightParity(HeckeDivError):
    """Odd weight passed to an operator that needs n**(1-k/2) rational."""


class UnsupportedParameter(HeckeDivError):
    """Hecke parameter outside the validity domain (e.g. composite n
    sharing a factor with the level)."""


class DeterminantMismatch(HeckeDivError):
    """Left-coset comparison of matrices with different determinants."""


class NotInDeltaN(HeckeDivError):
    """Matrix fails the Delta_N membership test (det > 0, (a,N)=1, N|c)."""


class UnknownDivisor(HeckeDivError):
    """An expression atom without symbolic divisor data."""


class NotPolynomialInJ(HeckeDivError):
    """A weight-0 series that is not a polynomial in j at the given
    precision (wrong level, or precision too small)."""


class NonGenusZeroLevel(HeckeDivError):
    """Harmonic slice requested at a level without a Hauptmodul."""


class ConvergenceBudgetExceeded(HeckeDivError):
    """A numeric evaluation could not reach the requested tolerance
    within its truncation budget."""


class MissingCuspValue(HeckeDivError):
    """A divisor pairing touched a cusp the evaluator has no value for."""
