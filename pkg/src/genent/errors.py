"""Exception hierarchy. The CLI maps each class to an exit status."""


class GenentError(Exception):
    pass


class InvalidArgumentError(GenentError, ValueError):
    pass


class DegenerateInputError(InvalidArgumentError):
    """Raised when Gram-Schmidt hits a (numerically) dependent candidate."""

    def __init__(self, index, pivot_norm):
        super().__init__(
            f"candidate {index} is linearly dependent on earlier candidates "
            f"(pivot norm {pivot_norm:.3e})"
        )
        self.index = index
        self.pivot_norm = pivot_norm


class InvariantViolationError(GenentError, ValueError):
    """A value breaks a documented invariant; ``invariant`` names which one."""

    def __init__(self, invariant, detail=""):
        msg = f"invariant violated: {invariant}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.invariant = invariant


class ResourceLimitError(GenentError):
    pass
