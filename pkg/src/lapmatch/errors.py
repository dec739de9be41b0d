"""Exception hierarchy shared across the package."""


class LapmatchError(Exception):
    """Base class for all package-specific errors."""


class Graph6ParseError(LapmatchError, ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the defect."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class DomainError(LapmatchError, ValueError):
    """An operation was called outside its stated domain."""


class SizeCapError(LapmatchError):
    """An exhaustive enumeration would exceed the desk-scale size cap."""


class NotDivisibleError(LapmatchError, ArithmeticError):
    """Exact polynomial division left a nonzero remainder.

    This error is load-bearing: in the pipeline it only fires when two
    computation routes disagree, i.e. it signals a bug rather than bad input.
    """


class InternalInconsistencyError(LapmatchError):
    """A proven invariant failed; this always indicates a defect, not data."""


class RouteDisagreementError(InternalInconsistencyError):
    """Independent computation routes produced different coefficients."""

    def __init__(self, message: str, coefficients_by_route: dict[str, tuple[int, ...]]):
        detail = "; ".join(f"{route}: {list(c)}" for route, c in coefficients_by_route.items())
        super().__init__(f"{message}: {detail}")
        self.coefficients_by_route = coefficients_by_route
