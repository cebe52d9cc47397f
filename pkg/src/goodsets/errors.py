"""Exception types shared across the package."""

from __future__ import annotations


class GoodSetError(ValueError):
    """Base class for all good-set related errors."""


class ValidationError(GoodSetError):
    """A finite point set is not the window of any good set.

    Subclasses carry enough detail to report the violating pair or
    coordinate; ``details()`` returns a JSON-serialisable dict.
    """

    code = "invalid"

    def details(self) -> dict:
        return {"error": self.code, "message": str(self)}


class EmptyInputError(ValidationError):
    code = "empty_input"


class DimensionMismatchError(ValidationError):
    code = "dimension_mismatch"


class MeetClosureError(ValidationError):
    code = "meet_closure_violation"

    def __init__(self, a, b):
        self.pair = (a, b)
        super().__init__(f"meet of {a} and {b} is missing from the set")

    def details(self) -> dict:
        return {"error": self.code, "pair": [list(p) for p in self.pair]}


class PropertyBError(ValidationError):
    code = "property_b_violation"

    def __init__(self, a, b, coordinate):
        self.pair = (a, b)
        self.coordinate = coordinate
        super().__init__(
            f"no witness for pair {a}, {b} at shared coordinate {coordinate}"
        )

    def details(self) -> dict:
        return {
            "error": self.code,
            "pair": [list(p) for p in self.pair],
            "coordinate": self.coordinate,
        }


class ConductorNotInSetError(ValidationError):
    code = "conductor_not_in_set"

    def __init__(self, conductor):
        self.conductor = conductor
        super().__init__(f"componentwise maximum {conductor} is not in the set")

    def details(self) -> dict:
        return {"error": self.code, "conductor": list(self.conductor)}


class ConductorNotMinimalError(ValidationError):
    code = "conductor_not_minimal"

    def __init__(self, coordinate, conductor):
        self.coordinate = coordinate
        self.conductor = conductor
        super().__init__(
            f"conductor {conductor} is not minimal: lowering coordinate "
            f"{coordinate} still gives a conductor point"
        )

    def details(self) -> dict:
        return {
            "error": self.code,
            "coordinate": self.coordinate,
            "conductor": list(self.conductor),
        }


class NotSemigroupError(GoodSetError):
    """An operation required a value semigroup but the set is not one."""


class NotGorensteinError(GoodSetError):
    """An operation required a symmetric semigroup but got an asymmetric one."""


class SubsetLimitError(GoodSetError):
    """Subset enumeration would exceed the configured dimension cap."""


class CurveError(ValueError):
    """Base class for curve-ingestion and valuation errors."""


class ExpressionError(CurveError):
    """The polynomial expression could not be parsed or evaluated."""


class BoundTooSmallError(CurveError):
    """The requested bound does not contain the conductor (saturation failed)."""


class TruncationError(CurveError):
    """A result could not be certified at the current truncation order."""
