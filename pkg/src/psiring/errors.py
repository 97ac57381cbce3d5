"""Error types shared across the package."""

from __future__ import annotations


class UsageError(ValueError):
    """Bad arguments: out-of-range parameters, mixed field contexts, malformed input."""


class BudgetError(RuntimeError):
    """A computation was refused because its estimated size exceeds the configured budget."""

    def __init__(self, message: str, estimate: int | None = None, budget: int | None = None):
        super().__init__(message)
        self.estimate = estimate
        self.budget = budget
