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

"""
Small dense complex linear algebra used by the rest of QGEM Sim.

Matrices are plain ``numpy`` arrays of dimension 2, 4 or 8. Basis index
``4*j1 + 2*j2 + j3`` is used throughout, so qubit 1 is the slowest-varying
tensor axis once a vector is reshaped to ``(2, 2, 2)``.
"""

from typing import Iterable, Sequence, Tuple, Union

import numpy as np

from ..exceptions import (
    DimensionMismatchError,
    InvalidMatrixError,
    InvalidParameterError,
    NotHermitianError,
    NotNormalizedError,
    NumericalConsistencyError,
)
from ..models.quantum import DIMENSION, N_QUBITS, Density_Matrix, Pure_State


#: Largest tolerated |M - M^dagger| entry before symmetrization.
HERMITIAN_TOLERANCE = 1e-10

#: Largest tolerated deviation of <psi|psi> from 1.
NORMALIZATION_TOLERANCE = 1e-9

#: Largest tolerated imaginary part of <psi|rho|psi>.
IMAGINARY_TOLERANCE = 1e-12

#: Out-of-range margin that is clamped instead of reported.
CLAMP_TOLERANCE = 1e-10

Matrix_Like = Union[np.ndarray, Density_Matrix, Sequence[Sequence[complex]]]


def as_complex_matrix(matrix: Matrix_Like) -> np.ndarray:
    """Square, finite complex128 view of a matrix or density matrix."""
    if isinstance(matrix, Density_Matrix):
        matrix = matrix.entries
    array = np.asarray(matrix, dtype=complex)
    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
        raise InvalidMatrixError("Expected a non-empty square matrix", shape=array.shape)
    if not np.all(np.isfinite(array)):
        raise InvalidMatrixError("Matrix has NaN or infinite entries", shape=array.shape)
    return array


def hermiticity_defect(matrix: Matrix_Like) -> float:
    """max |M[i][j] - conj(M[j][i])|."""
    array = as_complex_matrix(matrix)
    return float(np.max(np.abs(array - array.conj().T)))


def hermitian_eigenvalues(matrix: Matrix_Like) -> np.ndarray:
    """
    Eigenvalues of a Hermitian matrix in ascending order.

    The input is symmetrized as (M + M^dagger)/2 before solving, after
    checking that it was Hermitian within HERMITIAN_TOLERANCE.

    Raises:
        InvalidMatrixError: non-square input or non-finite entries
        NotHermitianError: asymmetry above tolerance
    """
    array = as_complex_matrix(matrix)
    asymmetry = hermiticity_defect(array)
    if asymmetry > HERMITIAN_TOLERANCE:
        raise NotHermitianError("Matrix is not Hermitian",
                                asymmetry=asymmetry, tolerance=HERMITIAN_TOLERANCE)
    symmetric = 0.5 * (array + array.conj().T)
    return np.linalg.eigvalsh(symmetric)


def require_normalized(state: Pure_State) -> None:
    """Raise NotNormalizedError unless <psi|psi> = 1 within tolerance."""
    norm_squared = state.norm_squared()
    if abs(norm_squared - 1.0) > NORMALIZATION_TOLERANCE:
        raise NotNormalizedError("State is not normalized", norm_squared=norm_squared)


def _check_qubit(qubit: int) -> int:
    if qubit not in (1, 2, 3):
        raise InvalidParameterError(f"Qubit index must be 1, 2 or 3, got {qubit}",
                                    field="qubit", value=qubit)
    return qubit - 1


def _projector(state: Pure_State) -> np.ndarray:
    require_normalized(state)
    return np.outer(state.amplitudes, state.amplitudes.conj())


def reduced_density(state: Pure_State, kept_qubit: int) -> np.ndarray:
    """2x2 reduced state of one qubit (1, 2 or 3) of a normalized pure state."""
    _check_qubit(kept_qubit)
    return partial_trace(_projector(state), [kept_qubit])


def reduced_density_pair(state: Pure_State, kept: Tuple[int, int]) -> np.ndarray:
    """4x4 reduced state of two qubits; the kept qubits keep their basis order."""
    axes = [_check_qubit(qubit) for qubit in kept]
    if len(axes) != 2 or axes[0] == axes[1]:
        raise InvalidParameterError("Kept qubits must be two distinct indices", field="kept",
                                    value=tuple(kept))
    return partial_trace(_projector(state), kept)


def partial_trace(rho: Matrix_Like, keep: Iterable[int]) -> np.ndarray:
    """Trace an 8x8 operator down to the qubits listed in ``keep`` (1-based)."""
    array = as_complex_matrix(rho)
    if array.shape != (DIMENSION, DIMENSION):
        raise DimensionMismatchError("Partial trace needs an 8x8 operator",
                                     expected=DIMENSION, actual=array.shape[0])
    kept_axes = sorted({_check_qubit(qubit) for qubit in keep})
    traced = [axis for axis in range(N_QUBITS) if axis not in kept_axes]

    tensor = array.reshape((2,) * (2 * N_QUBITS))
    remaining = N_QUBITS
    # Highest axis first so the lower ket/bra axis numbers stay valid.
    for axis in sorted(traced, reverse=True):
        tensor = np.trace(tensor, axis1=axis, axis2=axis + remaining)
        remaining -= 1
    size = 2 ** remaining
    return tensor.reshape(size, size)


def expectation_pure(rho: Matrix_Like, psi: Pure_State) -> float:
    """
    <psi|rho|psi> for a unit-trace rho and normalized psi.

    The value is clamped to [0, 1] when it strays outside by less than
    CLAMP_TOLERANCE; anything further out is a NumericalConsistencyError.
    """
    array = as_complex_matrix(rho)
    vector = psi.amplitudes
    if array.shape[0] != vector.shape[0]:
        raise DimensionMismatchError("Operator and state dimensions differ",
                                     expected=array.shape[0], actual=vector.shape[0])
    value = np.vdot(vector, array @ vector)
    if abs(value.imag) > IMAGINARY_TOLERANCE:
        raise NumericalConsistencyError("Expectation value has an imaginary part",
                                        quantity="expectation", value=float(value.imag))
    real = float(value.real)
    if real < -CLAMP_TOLERANCE or real > 1.0 + CLAMP_TOLERANCE:
        raise NumericalConsistencyError("Expectation value outside [0, 1]",
                                        quantity="expectation", value=real)
    return min(max(real, 0.0), 1.0)
