"""Exception types raised by genhurwitz computations."""

from __future__ import annotations


class HurwitzError(Exception):
    """Base class for computation errors (CLI exit code 1)."""


class DegreeMismatchError(HurwitzError, ValueError):
    """Two objects that must live in the same degree do not."""


class BudgetExceededError(HurwitzError):
    def __init__(self, estimate: int, budget: int, what: str = "enumeration"):
        self.estimate = estimate
        self.budget = budget
        super().__init__(
            f"{what} needs an estimated {estimate} compositions, "
            f"over the budget of {budget}"
        )


class DegreeCapError(HurwitzError, ValueError):
    def __init__(self, degree: int, cap: int, what: str = "computation"):
        self.degree = degree
        self.cap = cap
        super().__init__(f"{what} is capped at degree {cap}, got {degree}")
