"""Error hierarchy shared by every cgraph module.

Library code raises these; only the command line turns them into messages
and exit statuses (``exit_code``).
"""
from typing import Optional


class CGraphError(Exception):
    """Base class for all cgraph failures."""

    exit_code = 1


class InputError(CGraphError, ValueError):
    """Malformed input or arguments (usage errors)."""

    exit_code = 2


# Input / usage errors

class NotPrime(InputError):
    def __init__(self, p: int):
        super().__init__(f"{p} is not a prime modulus")
        self.p = p


class InvalidArgs(InputError):
    pass


class CGraphParseError(InputError):
    def __init__(self, message: str, line: Optional[int] = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")
        self.line = line


class LengthMismatch(InputError):
    pass


class VertexOutOfRange(InputError):
    pass


class NotAPermutation(InputError):
    pass


class NotAPartition(InputError):
    pass


class InvalidMatrix(InputError):
    pass


# Domain failures

class ModulusMismatch(CGraphError):
    pass


class ZeroInverse(CGraphError, ZeroDivisionError):
    pass


class WhiteColorRequested(CGraphError):
    def __init__(self, message: str = "color 0 (white) selects absence, not a subcgraph"):
        super().__init__(message)


class EdgeAbsent(CGraphError):
    pass


class SizeMismatch(CGraphError):
    pass


class TooLarge(CGraphError):
    pass


class TooSmall(CGraphError):
    pass


class TooFewEdges(CGraphError):
    pass


class BudgetExceeded(CGraphError):
    pass


class PreconditionViolated(CGraphError):
    pass


class NotBipartite(CGraphError):
    pass


class ColorConventionViolated(CGraphError):
    pass


class NotSquare(CGraphError):
    pass
