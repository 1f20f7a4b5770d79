"""
Custom exception classes for the ckcas engine.
"""


class CkcasError(Exception):
    """Base exception for ckcas."""

    def __init__(self, message: str, details: str = None):
        self.message = message
        self.details = details
        super().__init__(self.message)

    def __str__(self):
        if self.details:
            return f"{self.message}: {self.details}"
        return self.message


class OmegaError(CkcasError, ValueError):
    """Malformed contraction coefficients or substitution assignments."""
    pass


class AlgebraError(CkcasError, ValueError):
    """Invalid generators, index ranges or mismatched algebra sizes."""
    pass


class IndexSetError(CkcasError, ValueError):
    """Malformed W-symbol index sets."""
    pass


class CancellationError(CkcasError):
    """An odd exponent survived under the closed-form square root."""
    pass


class DegenerateFormError(CkcasError, ValueError):
    """A construction that needs every coefficient nonzero met a zero."""
    pass


class RegistryError(CkcasError, KeyError):
    """Unknown algebra name or incompatible dimension."""

    def __str__(self):
        # KeyError would otherwise repr() the message
        return CkcasError.__str__(self)


class RenderError(CkcasError):
    """Errors while rendering or parsing expressions."""
    pass


class OutputError(CkcasError):
    """Errors during output generation."""
    pass


class ConfigurationError(CkcasError):
    """Errors in configuration loading or validation."""
    pass


class VerificationError(CkcasError):
    """A verification run found a counterexample."""

    def __init__(self, message: str, details: str = None, witness: dict = None):
        super().__init__(message, details)
        self.witness = witness or {}
