"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed input: bad vertex ids, unparseable files, invalid parameters."""


class CapacityError(RuntimeError):
    """A configured cap (solver size, enumeration size, work budget) was exceeded."""

    def __init__(self, cap_name: str, limit, actual=None):
        self.cap_name = cap_name
        self.limit = limit
        self.actual = actual
        detail = f"cap '{cap_name}' exceeded (limit {limit}"
        if actual is not None:
            detail += f", needed {actual}"
        super().__init__(detail + ")")


class DomainError(ValueError):
    """Operation invoked on a graph outside its stated domain (e.g. kappa != 1)."""
