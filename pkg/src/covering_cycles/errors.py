class CoveringCyclesError(Exception):
    exit_code = 1


class GraphFormatError(CoveringCyclesError, ValueError):
    """Graph text could not be parsed."""

    exit_code = 1


class PreconditionError(CoveringCyclesError, ValueError):
    """Input violates an operation's precondition (N = 0, too many edges, ...)."""

    exit_code = 2


class ConsistencyError(CoveringCyclesError, ArithmeticError):
    """An exact identity that must hold did not: non-integral class count, route mismatch.

    Seeing this means a bug, not bad input.
    """

    exit_code = 3
