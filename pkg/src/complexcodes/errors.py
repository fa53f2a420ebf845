"""Exception types shared across the package."""


class InvalidComplexError(ValueError):
    """Malformed simplicial-complex input (bad vertex index, empty facet list, ...)."""


class DegenerateComplexError(InvalidComplexError):
    """Operation would produce a complex with no usable faces."""


class NonPrimeFieldError(ValueError):
    """Field modulus is not a prime; only prime fields are supported."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the configured face/column/message budget."""

    def __init__(self, kind: str, needed: int, budget: int):
        self.kind = kind
        self.needed = needed
        self.budget = budget
        super().__init__(
            f"{kind} budget exceeded: need {needed}, budget {budget}"
        )


class InputFormatError(ValueError):
    """Unparseable facet-list or vertex-map file."""
