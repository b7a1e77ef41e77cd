"""High-precision special functions and an identity-verification engine."""
from .numkernel import Context, make_context, ConfigurationError, DomainError, ConvergenceError

__version__ = "0.1.0"

__all__ = ["Context", "make_context", "ConfigurationError", "DomainError", "ConvergenceError", "__version__"]
