"""Node-expansion budgets shared by the exact search routines.

Every exhaustive solver in this package accepts a ``budget`` argument so it
reports "budget exceeded" instead of running unbounded on instances that are
too large.  A budget is either an integer limit or a :class:`NodeBudget`
instance; passing the same :class:`NodeBudget` to several calls makes them
share one allowance.
"""

from __future__ import annotations

DEFAULT_NODE_BUDGET = 10**8


class BudgetExceededError(RuntimeError):
    """An exact solver exceeded its node-expansion budget.

    Attributes carry whatever the solver had verified before giving up:
    ``lower``/``upper`` are proven bounds on the target quantity (or ``None``)
    and ``witness`` is a labeling certifying ``lower`` when one is known.
    """

    def __init__(self, message, *, spent=0, lower=None, upper=None, witness=None):
        super().__init__(message)
        self.spent = spent
        self.lower = lower
        self.upper = upper
        self.witness = witness


class NodeBudget:
    """Counts node expansions and raises once the limit is crossed."""

    __slots__ = ("limit", "spent")

    def __init__(self, limit: int = DEFAULT_NODE_BUDGET):
        if limit < 0:
            raise ValueError("budget limit must be non-negative")
        self.limit = limit
        self.spent = 0

    @classmethod
    def coerce(cls, budget: "int | NodeBudget | None") -> "NodeBudget":
        if budget is None:
            return cls()
        if isinstance(budget, NodeBudget):
            return budget
        return cls(budget)

    def spend(self, amount: int = 1) -> None:
        self.spent += amount
        if self.spent > self.limit:
            raise BudgetExceededError(
                f"node budget exhausted ({self.limit} expansions)", spent=self.spent
            )

    @property
    def remaining(self) -> int:
        return max(self.limit - self.spent, 0)

    def __repr__(self) -> str:
        return f"NodeBudget(spent={self.spent}, limit={self.limit})"
