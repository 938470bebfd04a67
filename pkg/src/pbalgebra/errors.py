"""Exception hierarchy.

Two families matter to callers (and to the CLI exit status):

* :class:`DomainError` -- the input is bad (not associative, unknown cell id,
  a cap was exceeded, ...).
* :class:`ConsistencyError` -- a computation produced something the theory
  forbids (a negative Kazhdan-Lusztig coefficient, two c-samples giving
  different special characters, ...).  These are never downgraded.
"""


class PBAlgebraError(Exception):
    """Base class for everything raised by this package."""


class DomainError(PBAlgebraError):
    pass


class ConsistencyError(PBAlgebraError):
    pass


# -- algebra_core --------------------------------------------------------

class BadRational(DomainError, ValueError):
    pass


class DimensionMismatch(DomainError):
    pass


class InvalidAlgebra(DomainError):
    """Raised by :meth:`ValidationReport.raise_if_invalid`."""

    def __init__(self, report):
        self.report = report
        first = report.violations[0] if report.violations else None
        super().__init__(f"{len(report.violations)} violation(s); first: {first}")


class ValidationIssue(DomainError):
    """One violated axiom; instances are collected in a validation report."""

    kind = "issue"

    def as_dict(self):
        return {"kind": self.kind, **self.details}


class NegativeConstant(ValidationIssue):
    kind = "NegativeConstant"

    def __init__(self, i, j, k, value):
        self.details = {"i": i, "j": j, "k": k, "value": str(value)}
        super().__init__(f"gamma({i},{j},{k}) = {value} < 0")


class UnitAxiomFailed(ValidationIssue):
    kind = "UnitAxiomFailed"

    def __init__(self, side, i):
        self.details = {"side": side, "i": i}
        super().__init__(f"unit fails on the {side} of basis element {i}")


class AssociativityFailed(ValidationIssue):
    kind = "AssociativityFailed"

    def __init__(self, i, j, k):
        self.details = {"i": i, "j": j, "k": k}
        super().__init__(f"(a_{i} a_{j}) a_{k} != a_{i} (a_{j} a_{k})")


class SizeCapExceeded(DomainError):
    pass


# -- constructors --------------------------------------------------------

class NotAssociative(DomainError):
    pass


class NoIdentity(DomainError):
    pass


class NotASubgroup(DomainError):
    pass


# -- kl_hecke ------------------------------------------------------------

class NotFiniteType(DomainError):
    pass


class RankCapExceeded(DomainError):
    pass


class PositivityViolation(ConsistencyError):
    pass


class NegativeSpecialization(ConsistencyError):
    pass


# -- cells / modules -----------------------------------------------------

class UnknownCellId(DomainError):
    pass


class NoWitness(ConsistencyError):
    pass


class NotMonoidBacked(DomainError):
    pass


class NotIdempotent(DomainError):
    pass


# -- spectral ------------------------------------------------------------

class NonPositiveCoefficient(DomainError):
    pass


class NotPerronFrobenius(DomainError):
    pass


class NotPositiveMatrix(DomainError):
    pass


class NoConvergence(ConsistencyError):
    pass


class NotIdempotentCell(DomainError):
    pass


class PositivityFailure(ConsistencyError):
    pass


# -- structure / special -------------------------------------------------

class ZeroVector(DomainError):
    pass


class ZeroQuotient(ConsistencyError):
    pass


class NotTransitive(DomainError):
    pass


class NoMaximum(ConsistencyError):
    pass


class NotIdempotentApex(ConsistencyError):
    pass


class CSampleDisagreement(ConsistencyError):
    def __init__(self, msg, first=None, second=None):
        super().__init__(msg)
        self.first = first
        self.second = second


class DuplicateSpecialAcrossCells(ConsistencyError):
    pass


class SpecialMismatch(ConsistencyError):
    """A transitive module's special differs from the one of its apex."""
