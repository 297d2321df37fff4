"""Reduction-step accounting shared by both Groebner engines."""

from __future__ import annotations

import os

DEFAULT_STEP_BUDGET = 10**6
ENV_VAR = "WEYLSLOPES_STEP_BUDGET"


class BudgetExceededError(RuntimeError):
    """Raised when a computation uses more reduction steps than allowed."""

    def __init__(self, limit: int):
        super().__init__(f"step budget of {limit} reduction steps exceeded")
        self.limit = limit


def default_limit() -> int:
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return DEFAULT_STEP_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValueError(f"{ENV_VAR} must be positive")
    return value


class StepBudget:
    """Mutable counter ticking once per elementary reduction step."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        self.limit = default_limit() if limit is None else int(limit)
        self.used = 0

    def tick(self, k: int = 1) -> None:
        self.used += k
        if self.used > self.limit:
            raise BudgetExceededError(self.limit)

    def remaining(self) -> int:
        return max(self.limit - self.used, 0)


def ensure_budget(budget: StepBudget | None) -> StepBudget:
    return budget if budget is not None else StepBudget()
