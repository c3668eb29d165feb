"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """Raised when an enumeration would exceed its configured work budget.

    Carries a message naming the budget and the predicted size, so callers
    can distinguish "too big to enumerate" from a genuine bug.  Nothing is
    ever silently truncated.
    """
