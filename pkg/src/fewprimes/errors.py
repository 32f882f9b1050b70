"""Exception hierarchy shared by every module."""


class FewPrimesError(Exception):
    """Base class for all errors raised by this package."""


class UnfactoredResidue(FewPrimesError, ValueError):
    """Trial division left a cofactor with a prime factor above the bound."""

    def __init__(self, value, residue, bound):
        self.value = value
        self.residue = residue
        self.bound = bound
        super().__init__(
            f"cannot factor {value}: cofactor {residue} has a prime factor > {bound}; supply it pre-factored"
        )


class ZeroElement(FewPrimesError, ValueError):
    """A multiplicative operation received a set containing 0."""


class HypothesisViolated(FewPrimesError, ValueError):
    """An input fails a hypothesis the construction depends on."""

    def __init__(self, message, offending=None):
        self.offending = offending
        super().__init__(message)


class BudgetExceeded(FewPrimesError, RuntimeError):
    """A computation would exceed a configured size or time budget."""

    def __init__(self, what, needed, cap):
        self.what = what
        self.needed = needed
        self.cap = cap
        super().__init__(f"{what}: needs {needed}, cap is {cap}")


class MemoryBudgetExceeded(BudgetExceeded):
    pass


class BruteForceBudgetExceeded(BudgetExceeded):
    pass


class ExhaustedSampler(FewPrimesError, RuntimeError):
    """Random sampling could not produce enough distinct values."""


class CheckFailed(FewPrimesError, AssertionError):
    """An assertion-grade inequality check did not hold."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"check failed: {report.name} ({report.lhs} {report.relation} {report.rhs})")
