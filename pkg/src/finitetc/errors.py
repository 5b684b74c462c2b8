"""Exceptions and the tri-state ``UNKNOWN`` answer."""


class FiniteTCError(Exception):
    pass


class CycleDetected(FiniteTCError, ValueError):
    pass


class DuplicateLabel(FiniteTCError, ValueError):
    pass


class IndexOutOfRange(FiniteTCError, IndexError):
    pass


class SizeLimitExceeded(FiniteTCError):
    pass


class BudgetExceeded(FiniteTCError):
    pass


class EndpointMismatch(FiniteTCError, ValueError):
    pass


class ParityViolation(FiniteTCError, ValueError):
    pass


class InvalidWitness(FiniteTCError, ValueError):
    pass


class DomainMismatch(FiniteTCError, ValueError):
    pass


class Infeasible(FiniteTCError):
    pass


class ParseError(FiniteTCError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)


class _Unknown:
    """Answer of a budgeted decision that ran out of budget.

    Deliberately refuses truth testing so it is never mistaken for False.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __bool__(self):
        raise TypeError("UNKNOWN has no truth value; compare with `is UNKNOWN`")

    def __repr__(self):
        return "UNKNOWN"

    def __reduce__(self):
        return (_Unknown, ())


UNKNOWN = _Unknown()


def tri_and(a, b):
    """Kleene conjunction over True / False / UNKNOWN."""
    if a is False or b is False:
        return False
    if a is UNKNOWN or b is UNKNOWN:
        return UNKNOWN
    return True
