"""Exception hierarchy.

Every error carries a stable machine-readable ``code`` (used verbatim by the
CLI's error JSON) and an optional ``detail`` mapping with structured context
such as the position of a malformed entry or the first violated equation.
"""

from __future__ import annotations

from typing import Any, Mapping, Optional


class DrazinKitError(Exception):
    """Base class for all library errors."""

    code = "error"

    def __init__(self, message: str, detail: Optional[Mapping[str, Any]] = None):
        super().__init__(message)
        self.detail = dict(detail) if detail else {}


class ParseError(DrazinKitError):
    """Malformed textual or JSON input; ``detail`` locates the offending piece."""

    code = "malformed-input"


class FieldMismatch(DrazinKitError):
    """Operands live over different scalar fields."""

    code = "field-mismatch"


class ShapeMismatch(DrazinKitError):
    """Matrix dimensions incompatible with the requested operation."""

    code = "shape-mismatch"


class DivisionByZero(DrazinKitError):
    """Inversion of a zero scalar."""

    code = "division-by-zero"


class SingularMatrix(DrazinKitError):
    """Ordinary inverse requested for a rank-deficient matrix."""

    code = "singular-matrix"

    def __init__(self, message: str, rank: int):
        super().__init__(message, {"rank": rank})
        self.rank = rank


class IndexTooLarge(DrazinKitError):
    """Group inverse requested but the Drazin index exceeds 1."""

    code = "index-too-large"

    def __init__(self, message: str, index: int):
        super().__init__(message, {"index": index})
        self.index = index


class PreconditionViolated(DrazinKitError):
    """Input pair does not satisfy the relation a suite or formula assumes."""

    code = "precondition-violated"


class ZeroLambda(DrazinKitError):
    """The scaling constant of a scaled-commutation relation must be nonzero."""

    code = "zero-lambda"


class ExponentOverflow(DrazinKitError):
    """Requested identity exponent range exceeds the configured cap."""

    code = "exponent-overflow"


class NotNilpotentWithinBound(DrazinKitError):
    """A matrix expected to be nilpotent had nonzero powers up to the bound."""

    code = "not-nilpotent-within-bound"

    def __init__(self, message: str, ranks: tuple[int, ...]):
        super().__init__(message, {"ranks": list(ranks)})
        self.ranks = ranks


class CharacteristicTwo(DrazinKitError):
    """The cross-cube sum formula needs 2 invertible, so characteristic 2 is out."""

    code = "characteristic-two"


class BudgetExceeded(DrazinKitError):
    """Exhaustive search space larger than the configured budget."""

    code = "budget-exceeded"

    def __init__(self, message: str, size: int, budget: int):
        super().__init__(message, {"size": size, "budget": budget})
        self.size = size
        self.budget = budget


class IncompatibleFamily(DrazinKitError):
    """Generator family cannot produce a pair for the requested relation/parameters."""

    code = "incompatible-family"


class InternalCertificationFailure(DrazinKitError):
    """A post-hoc certificate failed; indicates a bug, never bad input."""

    code = "internal-certification-failure"
