"""Exception types and the tri-state search result."""


class TetraforgeError(Exception):
    """Base class for package errors."""


class ParameterError(TetraforgeError, ValueError):
    """A family or operator was given parameters outside its domain."""


class DegenerateGraphError(ParameterError):
    """Parameters are formally in range but the construction collapses
    (loops, parallel edges, or a valence drop)."""


class GraphFormatError(TetraforgeError, ValueError):
    """Malformed graph6 text.  ``offset`` is the byte position."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class BudgetExceededError(TetraforgeError):
    """A backtracking search hit its node budget."""


class _Unknown:
    """Singleton returned by budgeted searches that ran out of room.

    Truthiness is deliberately undefined: code must compare with ``is``.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNKNOWN"

    def __bool__(self):
        raise TypeError("UNKNOWN is not a boolean; compare with 'is UNKNOWN'")


UNKNOWN = _Unknown()
