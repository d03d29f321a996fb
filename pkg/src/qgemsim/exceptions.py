# Copyright (c) 2026 QGEM Sim Team
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""Custom exceptions for QGEM Sim."""

from typing import Any, Dict, Optional


#: Exit code reported by the CLI for invalid specs, parameters and geometries.
EXIT_INVALID_INPUT = 2

#: Exit code reported by the CLI for numerical-consistency failures.
EXIT_NUMERICAL = 3


class QGEM_Error(Exception):
    """Base exception for all QGEM Sim errors."""

    exit_code = EXIT_INVALID_INPUT

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        """
        Initialize QGEM Sim error.

        Args:
            message: Error message
            details: Additional error details
        """
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __str__(self) -> str:
        """String representation of the error."""
        if self.details:
            return f"{self.message} (Details: {self.details})"
        return self.message


def _collect(**values: Any) -> Dict[str, Any]:
    """Keep only the detail entries that were actually supplied."""
    return {key: value for key, value in values.items() if value is not None}


# --------------------------------------------------------------------------
# Linear algebra
# --------------------------------------------------------------------------

class InvalidMatrixError(QGEM_Error):
    """Raised when a matrix has the wrong shape or non-finite entries."""

    exit_code = EXIT_NUMERICAL

    def __init__(self, message: str, shape: Optional[tuple] = None):
        super().__init__(message, _collect(shape=shape))
        self.shape = shape


class NotHermitianError(QGEM_Error):
    """Raised when a matrix expected to be Hermitian is not."""

    exit_code = EXIT_NUMERICAL

    def __init__(self, message: str, asymmetry: Optional[float] = None,
                 tolerance: Optional[float] = None):
        """
        Initialize Hermiticity error.

        Args:
            message: Error message
            asymmetry: Largest entry of |M - M^dagger|
            tolerance: Tolerance that was exceeded
        """
        super().__init__(message, _collect(asymmetry=asymmetry, tolerance=tolerance))
        self.asymmetry = asymmetry
        self.tolerance = tolerance


class NotNormalizedError(QGEM_Error):
    """Raised when a pure state does not have unit norm."""

    def __init__(self, message: str, norm_squared: Optional[float] = None):
        super().__init__(message, _collect(norm_squared=norm_squared))
        self.norm_squared = norm_squared


class DimensionMismatchError(QGEM_Error):
    """Raised when operands of a contraction have incompatible dimensions."""

    def __init__(self, message: str, expected: Optional[int] = None,
                 actual: Optional[int] = None):
        super().__init__(message, _collect(expected=expected, actual=actual))
        self.expected = expected
        self.actual = actual


# --------------------------------------------------------------------------
# Physical parameters and geometry
# --------------------------------------------------------------------------

class InvalidParameterError(QGEM_Error):
    """Raised when a physical or numerical parameter is out of range."""

    def __init__(self, message: str, field: Optional[str] = None,
                 value: Any = None):
        """
        Initialize parameter error.

        Args:
            message: Error message
            field: Name of the offending parameter
            value: Offending value
        """
        super().__init__(message, _collect(field=field, value=value))
        self.field = field
        self.value = value


class DegenerateGeometryError(QGEM_Error):
    """Raised when two superposition instances coincide (zero distance)."""

    def __init__(self, message: str, setup: Optional[str] = None,
                 pair: Optional[str] = None, field: Optional[str] = "l"):
        super().__init__(message, _collect(setup=setup, pair=pair, field=field))
        self.setup = setup
        self.pair = pair
        self.field = field


class UnphysicalGeometryError(QGEM_Error):
    """Raised when a phase formula needs a negative distance."""

    def __init__(self, message: str, setup: Optional[str] = None,
                 pair: Optional[str] = None, distance: Optional[float] = None,
                 field: Optional[str] = "l"):
        super().__init__(message, _collect(setup=setup, pair=pair,
                                           distance=distance, field=field))
        self.setup = setup
        self.pair = pair
        self.distance = distance
        self.field = field


# --------------------------------------------------------------------------
# Measures and classification
# --------------------------------------------------------------------------

class DegeneracyViolationError(QGEM_Error):
    """Raised when a phase set does not follow its setup's degeneracy pattern."""

    def __init__(self, message: str, setup: Optional[str] = None,
                 group: Optional[tuple] = None):
        super().__init__(message, _collect(setup=setup, group=group))
        self.setup = setup
        self.group = group


class NumericalConsistencyError(QGEM_Error):
    """Raised when a computed quantity leaves its theoretical range."""

    exit_code = EXIT_NUMERICAL

    def __init__(self, message: str, quantity: Optional[str] = None,
                 value: Optional[float] = None):
        super().__init__(message, _collect(quantity=quantity, value=value))
        self.quantity = quantity
        self.value = value


class InvalidToleranceError(QGEM_Error):
    """Raised when a classification tolerance is not strictly positive."""

    def __init__(self, message: str, eps: Optional[float] = None):
        super().__init__(message, _collect(eps=eps))
        self.eps = eps


# --------------------------------------------------------------------------
# Sweeps, thresholds, configuration and output
# --------------------------------------------------------------------------

class InvalidSpecError(QGEM_Error):
    """Raised when a sweep specification is malformed."""

    def __init__(self, message: str, field: Optional[str] = None,
                 value: Any = None):
        super().__init__(message, _collect(field=field, value=value))
        self.field = field
        self.value = value


class NoDetectionAtZeroError(QGEM_Error):
    """Raised when the detection predicate already fails without decoherence."""

    def __init__(self, message: str, setup: Optional[str] = None,
                 predicate: Optional[str] = None, value: Optional[float] = None):
        super().__init__(message, _collect(setup=setup, predicate=predicate,
                                           value=value))
        self.setup = setup
        self.predicate = predicate
        self.value = value


class NonMonotonePredicateError(QGEM_Error):
    """Raised when the detection predicate is not monotone in the decoherence rate."""

    exit_code = EXIT_NUMERICAL

    def __init__(self, message: str, samples: Optional[list] = None):
        """
        Initialize monotonicity error.

        Args:
            message: Error message
            samples: The (gamma, holds) pre-sampling grid that exposed the problem
        """
        super().__init__(message, _collect(samples=samples))
        self.samples = samples or []


class ConfigurationError(QGEM_Error):
    """Error raised due to configuration issues."""

    def __init__(self, message: str, config_key: Optional[str] = None,
                 config_value: Any = None, config_file: Optional[str] = None):
        """
        Initialize configuration error.

        Args:
            message: Error message
            config_key: Configuration key that caused the error
            config_value: Configuration value that caused the error
            config_file: File the value was read from
        """
        super().__init__(message, _collect(config_key=config_key,
                                           config_value=config_value,
                                           config_file=config_file))
        self.config_key = config_key
        self.config_value = config_value
        self.config_file = config_file


class OutputFormatError(QGEM_Error):
    """Error raised while writing a result table."""

    def __init__(self, message: str, format_name: Optional[str] = None,
                 output_file: Optional[str] = None):
        super().__init__(message, _collect(format_name=format_name,
                                           output_file=output_file))
        self.format_name = format_name
        self.output_file = output_file
