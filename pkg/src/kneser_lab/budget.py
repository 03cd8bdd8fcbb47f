"""Node/time budgets shared by the exact solvers.

Exhaustion is always reported as its own outcome (exception or "exhausted"
status), never conflated with a negative answer.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass

DEFAULT_NODE_LIMIT = 100_000_000
DEFAULT_TIME_LIMIT = 300.0

BUDGET_ENV_VAR = "KNESER_LAB_BUDGET"


class BudgetExhausted(Exception):
    """A solver hit its node or time limit before finishing."""

    def __init__(self, nodes: int, seconds: float):
        super().__init__(f"budget exhausted after {nodes} nodes / {seconds:.1f}s")
        self.nodes = nodes
        self.seconds = seconds


@dataclass(frozen=True)
class SearchBudget:
    node_limit: int | None = DEFAULT_NODE_LIMIT
    time_limit: float | None = DEFAULT_TIME_LIMIT

    @classmethod
    def from_text(cls, text: str) -> "SearchBudget":
        """Parse "<nodes>,<seconds>"; either part may be empty to keep the default."""
        nodes_s, _, secs_s = text.partition(",")
        nodes = int(nodes_s) if nodes_s.strip() else DEFAULT_NODE_LIMIT
        secs = float(secs_s) if secs_s.strip() else DEFAULT_TIME_LIMIT
        return cls(nodes, secs)

    @classmethod
    def from_env(cls) -> "SearchBudget":
        raw = os.environ.get(BUDGET_ENV_VAR, "")
        return cls.from_text(raw) if raw.strip() else cls()

    def start(self) -> "BudgetClock":
        return BudgetClock(self)


def resolve_budget(budget: SearchBudget | None) -> SearchBudget:
    return budget if budget is not None else SearchBudget.from_env()


class BudgetClock:
    """Mutable accounting for one solver invocation."""

    def __init__(self, budget: SearchBudget):
        self.node_limit = budget.node_limit
        self.time_limit = budget.time_limit
        self.nodes = 0
        self._t0 = time.monotonic()

    def elapsed(self) -> float:
        return time.monotonic() - self._t0

    def tick(self, count: int = 1) -> None:
        self.nodes += count
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise BudgetExhausted(self.nodes, self.elapsed())
        # check the wall clock sparingly
        if (
            self.time_limit is not None
            and self.nodes % 2048 == 0
            and self.elapsed() > self.time_limit
        ):
            raise BudgetExhausted(self.nodes, self.elapsed())
