"""
Exception types raised by the verification engine.

Everything derives from ValueError so callers that only know about bad
input keep working.
"""


class ScalarParseError(ValueError):
    """A scalar expression could not be parsed."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class HPoleError(ValueError):
    """A rational function has a pole at q = 1."""

    def __init__(self, order: int):
        super().__init__(f"pole of order {order} at q = 1")
        self.order = order


class NotSkewInvertibleError(ValueError):
    """The skew-inverse linear system of a braiding is singular."""


class BraidingValidationError(ValueError):
    """A candidate braiding violates one of its defining identities."""

    def __init__(self, message: str, witness: str = ""):
        super().__init__(f"{message}: {witness}" if witness else message)
        self.witness = witness


class BudgetExceededError(ValueError):
    """A computation would exceed its degree or level budget."""


class UnknownCheckError(ValueError):
    """No check is registered under the requested name."""
