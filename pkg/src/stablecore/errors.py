"""Exception types shared across the package."""


class StablecoreError(Exception):
    """Base class for all errors raised by stablecore."""


class NotATree(StablecoreError):
    """Edge set does not describe a tree (wrong count, duplicate, loop, disconnected)."""


class OutOfRange(StablecoreError):
    """A vertex index is outside 0..n-1."""


class TooSmall(StablecoreError):
    """Parameter below the smallest supported value (trees need n >= 2)."""


class TooLarge(StablecoreError):
    """Parameter above a configured ceiling (enumeration or brute-force scale)."""


class EmptyResult(StablecoreError):
    """Operation would produce an empty graph."""


class NotStable(StablecoreError):
    """Vertex set contains two adjacent vertices."""


class NotPendant(StablecoreError):
    """Vertex set contains a vertex of degree != 1."""


class LimitExceeded(StablecoreError):
    """Enumeration would produce more results than the caller allowed.

    ``count`` carries the number of results that exist.
    """

    def __init__(self, message: str, count: int):
        super().__init__(message)
        self.count = count


class ScaleExceeded(StablecoreError):
    """Claim check needs an exhaustive scan but the tree is too large for it."""


class ParseError(StablecoreError):
    """Malformed edge-list input. ``line`` is the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
