"""Exception hierarchy shared by every module."""


class SimpleSCError(Exception):
    """Base class for domain errors raised by this package."""


class InvalidType(SimpleSCError, ValueError):
    pass


class WordInvalid(SimpleSCError):
    """A stored Weyl word does not realize the permutation it is attached to."""


class NotPrime(SimpleSCError, ValueError):
    pass


class DegreeZero(SimpleSCError, ValueError):
    pass


class NotASubfield(SimpleSCError, ValueError):
    pass


class EmbeddingNotFound(SimpleSCError):
    pass


class RankMismatch(SimpleSCError, ValueError):
    pass


class FieldMismatch(SimpleSCError, ValueError):
    pass


class BudgetExceeded(SimpleSCError):
    def __init__(self, needed: int, budget: int, what: str = "action evaluations"):
        super().__init__(f"{what}: need {needed}, budget {budget}")
        self.needed = needed
        self.budget = budget


class HalfPowerResidue(SimpleSCError, ValueError):
    """A half-integer power of q survived where integrality is guaranteed."""


class Inconsistent(SimpleSCError):
    """A candidate satisfied the formal-degree identity with non-forced values."""
