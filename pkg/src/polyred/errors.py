"""Exception taxonomy shared across the package."""


class ValidationError(ValueError):
    """Malformed or inapplicable input (bad graph, wrong params, ...)."""


class ResourceGuardError(RuntimeError):
    """An enumeration would exceed the configured size guard."""


class InternalCheckError(RuntimeError):
    """A builder's own consistency check failed; signals a wrong derivation."""
