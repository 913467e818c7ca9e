"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """Raised when a computation would exceed a configured size guard."""

    def __init__(self, what: str, count: int, limit: int):
        self.what = what
        self.count = count
        self.limit = limit
        super().__init__(f"{what}: {count} exceeds the configured limit of {limit}")
