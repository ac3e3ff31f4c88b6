"""Exception hierarchy for ncpforge.

Theorem-falsification errors (CatalanMismatch, MeetJoinMissing, ...) must
never fire on catalog groups; they exist so that a wrong construction fails
loudly instead of silently producing bad counts.
"""


class NcpForgeError(Exception):
    """Base class for all ncpforge errors."""


class ConfigError(NcpForgeError):
    """Invalid group spec or run configuration."""


class DivisionByZero(NcpForgeError, ZeroDivisionError):
    """Inversion of zero in a cyclotomic field."""


class OrderCapExceeded(NcpForgeError):
    """Group order above the configured cap."""


class CoxeterValidationFailed(NcpForgeError):
    """Catalog Coxeter element failed a post-check."""


class ElementNotInGroup(NcpForgeError):
    """Element index or matrix does not belong to the group."""


class CatalanMismatch(NcpForgeError):
    """|NCP| differs from the product formula."""


class MeetJoinMissing(NcpForgeError):
    """A pair of lattice members has no meet or join."""


class RedCountMismatch(NcpForgeError):
    """Enumerated reduced decompositions differ from n! h^n / |W|."""


class LedgerDisagreement(NcpForgeError):
    """The three independent fact_p computations disagree."""


class NotAChain(NcpForgeError):
    """Sequence is not weakly increasing under the absolute order."""


class IndexOutOfRange(NcpForgeError):
    """Braid generator index outside the tuple."""


class OrbitCapExceeded(NcpForgeError):
    """Hurwitz orbit grew past the configured cap."""


class ClassificationMismatch(NcpForgeError):
    """Primitive orbit <-> conjugacy class bijection failed."""


class NonIntegralDegree(NcpForgeError):
    """Derived stratum degree is not a positive integer."""


class TableMismatch(NcpForgeError):
    """Computed (r, u) multiset differs from the reference table row."""


class NotADivisor(NcpForgeError):
    """Element is not a divisor of the Coxeter element."""
