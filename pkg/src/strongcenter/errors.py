"""Shared exception types and the environment-tunable size guard."""

from __future__ import annotations

import os


class DimensionMismatchError(ValueError):
    """Inputs of different dimensions were combined."""


class ParseError(ValueError):
    """An input file does not match its declared format."""


class SizeGuardError(RuntimeError):
    """A brute-force operation would exceed its cost budget."""


class BoundedIntersectionError(ValueError):
    """A set system violates the bounded-intersection property it claims."""


SIZE_GUARD_ENV = "SC_SIZE_GUARD"


def check_size_guard(estimated_cost: int, default_budget: int) -> None:
    """Raise SizeGuardError when ``estimated_cost`` exceeds the budget.

    The budget is ``default_budget`` unless the SC_SIZE_GUARD environment
    variable holds a positive integer, which then overrides every guard.
    """
    budget = default_budget
    raw = os.environ.get(SIZE_GUARD_ENV)
    if raw:
        try:
            budget = int(raw)
        except ValueError:
            raise ValueError(
                f"{SIZE_GUARD_ENV} must be an integer, got {raw!r}"
            ) from None
    if estimated_cost > budget:
        raise SizeGuardError(
            f"estimated cost {estimated_cost} exceeds budget {budget}; "
            f"set {SIZE_GUARD_ENV} to raise the limit"
        )
