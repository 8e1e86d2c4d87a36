"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class WeylInvError(ValueError):
    """A domain error: the input is well-formed but mathematically rejected."""


class BudgetExceeded(RuntimeError):
    """A search or enumeration ran past its configured budget.

    Distinct from a negative answer: the computation simply did not finish.
    """

    def __init__(self, message, *, used=None, budget=None):
        super().__init__(message)
        self.used = used
        self.budget = budget
