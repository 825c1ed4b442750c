"""Exception hierarchy shared by every module of the package."""


class CentroError(Exception):
    """Base class for all package errors."""


class PreconditionError(CentroError, ValueError):
    """An input violates the documented precondition of an operation."""


class NotConjugateClosed(PreconditionError):
    pass


class ObstructedList(CentroError):
    """One real entry plus an odd number of conjugate pairs.

    No centrosymmetric nonnegative matrix has such a spectrum.
    """

    citation = "Theorem: one real eigenvalue with an odd number of conjugate pairs"

    def __init__(self, message=None):
        super().__init__(message or self.citation)


class NoRealCentroSplit(PreconditionError):
    """Even order with no real entries and an odd number of pairs.

    Both diagonal blocks of the reduced form have odd order, so each carries
    at least one real eigenvalue; the list cannot be realized.
    """


class DimensionMismatch(PreconditionError):
    pass


class NotCentrosymmetric(PreconditionError):
    pass


class NotAnEigenvector(PreconditionError):
    pass


class NotEigenvectors(PreconditionError):
    pass


class RankDeficientX(PreconditionError):
    pass


class PerronVectorNotSymmetric(CentroError):
    pass


class ConvergenceFailure(CentroError):
    pass


class CompanionNotNonnegative(CentroError):
    pass


class ZeroPerronComponent(CentroError):
    pass


class DiagonalSumMismatch(PreconditionError):
    pass


class NegativeEntryInList(PreconditionError):
    pass


class PerronNotStrict(PreconditionError):
    pass


class NotRealizable4x4(PreconditionError):
    pass


class NotStrictlyComplex(PreconditionError):
    pass


class CardinalityMismatch(PreconditionError):
    pass


class PartitionMismatch(PreconditionError):
    pass


class MiddleBlockParityMismatch(PreconditionError):
    pass


class ConditionViolation(CentroError):
    """A sufficient condition of a closed-form construction fails.

    ``condition`` names which one: ``"pre"``, ``"i"``, ``"ii"``, ``"iii"``
    or ``"iv"``.
    """

    def __init__(self, condition, detail=""):
        self.condition = condition
        msg = f"condition {condition} violated"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class NoApplicableConstruction(CentroError):
    def __init__(self, attempts):
        self.attempts = list(attempts)
        lines = "; ".join(f"{name}: {why}" for name, why in self.attempts)
        super().__init__(f"no construction applies ({lines})")


class UnknownFixture(CentroError, KeyError):
    pass
