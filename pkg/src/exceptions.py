"""Custom exceptions for EdgeLab.

This module defines the exception hierarchy used throughout the EdgeLab codebase.
All custom exceptions inherit from EdgeLabError for consistent error handling.
"""

from typing import Any, Dict, Optional


class EdgeLabError(Exception):
    """Base exception for all EdgeLab-specific errors.

    Attributes:
        message: Human-readable error message
        details: Optional dictionary with additional error context
    """

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class ParameterError(EdgeLabError):
    """Raised when a numeric parameter is outside its admissible set.

    Attributes:
        parameter_name: Name of the invalid parameter
        actual_value: The value that was provided
    """

    def __init__(self, parameter_name: str, actual_value: Any,
                 message: Optional[str] = None):
        msg = message or f"Invalid value for '{parameter_name}': {actual_value!r}"
        super().__init__(msg, {"parameter": parameter_name, "value": actual_value})
        self.parameter_name = parameter_name
        self.actual_value = actual_value


class SizeError(EdgeLabError):
    """Raised when a matrix is too small for the requested operation."""

    def __init__(self, operation: str, n: int, minimum: int):
        super().__init__(
            f"{operation} requires n >= {minimum}, got n = {n}",
            {"operation": operation, "n": n, "minimum": minimum},
        )
        self.operation = operation
        self.n = n
        self.minimum = minimum


class IndexOutOfRangeError(EdgeLabError):
    """Raised when a spectral index falls outside [1, n]."""

    def __init__(self, index: int, n: int):
        super().__init__(
            f"Eigenvalue index {index} outside [1, {n}]",
            {"index": index, "n": n},
        )
        self.index = index
        self.n = n


class NumericError(EdgeLabError):
    """Raised when a matrix carries non-finite entries."""
    pass


class DomainError(EdgeLabError):
    """Raised when a formula is evaluated outside its domain.

    Attributes:
        quantity: Name of the formula or statistic being evaluated
    """

    def __init__(self, quantity: str, message: str,
                 details: Optional[Dict[str, Any]] = None):
        super().__init__(f"{quantity}: {message}", details)
        self.quantity = quantity


class EmptySampleError(EdgeLabError):
    """Raised when a statistic is requested on an empty sample."""

    def __init__(self, operation: str):
        super().__init__(f"{operation} requires a nonempty sample")
        self.operation = operation


class MatchingError(EdgeLabError):
    """Raised when an ensemble labelled as moment-matched fails the check.

    Attributes:
        ensemble: Name tag of the offending ensemble
        order: Matching order that was required
        reference: Gaussian ensemble the moments were compared with
    """

    def __init__(self, ensemble: str, order: int, reference: str = "GUE"):
        super().__init__(
            f"Ensemble '{ensemble}' does not match {reference} moments to order {order}",
            {"ensemble": ensemble, "order": order},
        )
        self.ensemble = ensemble
        self.order = order
        self.reference = reference


class ConfigurationError(EdgeLabError):
    """Raised when configuration or report files are invalid or unreadable."""
    pass
