class ValidationError(ValueError):
    """Input violates an axiom (building set, matroid) or a format rule."""


class BudgetExceeded(RuntimeError):
    """A brute-force computation would exceed its configured size limit."""


class OracleMismatch(AssertionError):
    """Two independent computations of the same quantity disagree."""
