"""Exception types shared across the package."""


class DomainError(ValueError):
    """An operation was applied outside its domain (e.g. a map that needs a
    bi-increasing permutation got a general one, or an inactive insertion
    site was used)."""


class CapExceededError(RuntimeError):
    """An exhaustive enumeration was requested beyond the configured size cap
    without an explicit override."""


class ParseError(ValueError):
    """A serialized object did not match its grammar. The message names the
    grammar rule that failed."""
