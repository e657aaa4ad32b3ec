"""Shared exception types for resource limits."""

from __future__ import annotations


class ResourceLimitError(RuntimeError):
    """A configured resource budget would be exceeded."""


class BudgetExceededError(ResourceLimitError):
    """Exhaustive enumeration would need more colorings than the budget allows."""


class StateCapExceededError(ResourceLimitError):
    """The column-state space grew past the configured cap."""
