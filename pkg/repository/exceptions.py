"""
Verifier Exceptions
Error taxonomy shared by the algebra, homology and quadrature modules
"""

from typing import Any, Optional


class ArgumentError(ValueError):
    """Raised when a caller passes arguments that violate a precondition"""


class ContractError(ValueError):
    """Raised when data handed to an operation breaks its contract (e.g. a non-closed cochain)"""


class VerificationError(Exception):
    """Raised when a postcondition fails; carries the offending entry"""

    def __init__(self, message: str, entry: Optional[Any] = None):
        super().__init__(message)
        self.entry = entry

    def __str__(self) -> str:
        base = super().__str__()
        if self.entry is None:
            return base
        return f"{base} (entry: {self.entry})"
