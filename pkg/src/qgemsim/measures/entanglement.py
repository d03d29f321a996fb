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
Entanglement measures of three-qubit states.

Negativities work on any density matrix. The three-tangle, chi and the
witness reference are pure-state quantities; the witness expectation
combines a pure reference with a (possibly decohered) density matrix.
"""

import math
from typing import Dict

import numpy as np

from ..exceptions import DegeneracyViolationError, InvalidParameterError, NumericalConsistencyError
from ..models.quantum import (
    DEGENERACY_GROUPS,
    DIMENSION,
    N_QUBITS,
    Bipartition,
    Phase_Set,
    Pure_State,
    Setup_Kind,
    Witness_Report,
)
from ..numerics.numkernel import (
    CLAMP_TOLERANCE,
    Matrix_Like,
    as_complex_matrix,
    expectation_pure,
    hermitian_eigenvalues,
    reduced_density,
    reduced_density_pair,
    require_normalized,
)


#: Eigenvalues of a partial transpose above this are not counted as negative.
NEGATIVE_EIGENVALUE_CUTOFF = -1e-12

#: Eigenvalues of a two-qubit state dropped when factoring it as V V^dagger.
RANK_CUTOFF = 1e-14

SIGMA_Y_PAIR = np.array([[0, 0, 0, -1],
                         [0, 0, 1, 0],
                         [0, 1, 0, 0],
                         [-1, 0, 0, 0]], dtype=complex)


def _clamp(value: float, upper: float, quantity: str) -> float:
    """Clamp into [0, upper] when within CLAMP_TOLERANCE, otherwise fail."""
    if value < -CLAMP_TOLERANCE or value > upper + CLAMP_TOLERANCE:
        raise NumericalConsistencyError(f"{quantity} outside [0, {upper}]",
                                        quantity=quantity, value=value)
    return min(max(value, 0.0), upper)


def partial_transpose(rho: Matrix_Like, part: Bipartition) -> np.ndarray:
    """Transpose the index of the isolated qubit of ``part``."""
    array = as_complex_matrix(rho)
    axis = part.qubit - 1
    tensor = array.reshape((2,) * (2 * N_QUBITS))
    return np.swapaxes(tensor, axis, axis + N_QUBITS).reshape(DIMENSION, DIMENSION)


def negativity(rho: Matrix_Like, part: Bipartition) -> float:
    """-2 times the sum of the negative eigenvalues of the partial transpose."""
    eigenvalues = hermitian_eigenvalues(partial_transpose(rho, part))
    negative = eigenvalues[eigenvalues < NEGATIVE_EIGENVALUE_CUTOFF]
    return float(-2.0 * np.sum(negative)) if negative.size else 0.0


def bipartition_negativities(rho: Matrix_Like) -> Dict[Bipartition, float]:
    return {part: negativity(rho, part) for part in Bipartition}


def tripartite_negativity(rho: Matrix_Like) -> float:
    """Geometric mean of the three one-versus-two negativities."""
    product = 1.0
    for value in bipartition_negativities(rho).values():
        if value == 0.0:
            return 0.0
        product *= value
    return float(np.cbrt(product))


def three_tangle_pure(state: Pure_State) -> float:
    """4 |d1 - 2 d2 + 4 d3| of the eight amplitudes."""
    require_normalized(state)
    a = state.amplitudes
    d1 = (a[0b000] ** 2 * a[0b111] ** 2 + a[0b001] ** 2 * a[0b110] ** 2
          + a[0b010] ** 2 * a[0b101] ** 2 + a[0b100] ** 2 * a[0b011] ** 2)
    d2 = (a[0b000] * a[0b111] * a[0b011] * a[0b100]
          + a[0b000] * a[0b111] * a[0b101] * a[0b010]
          + a[0b000] * a[0b111] * a[0b110] * a[0b001]
          + a[0b011] * a[0b100] * a[0b101] * a[0b010]
          + a[0b011] * a[0b100] * a[0b110] * a[0b001]
          + a[0b101] * a[0b010] * a[0b110] * a[0b001])
    d3 = (a[0b000] * a[0b110] * a[0b101] * a[0b011]
          + a[0b111] * a[0b001] * a[0b010] * a[0b100])
    return _clamp(4.0 * abs(d1 - 2.0 * d2 + 4.0 * d3), 1.0, "three-tangle")


def three_tangle_closed(setup: Setup_Kind, phases: Phase_Set) -> float:
    """
    Three-tangle of the evolved state from the setup's closed form.

    Raises:
        DegeneracyViolationError: the phase set does not have the setup's
            degeneracy pattern
    """
    if phases.setup is not setup or not phases.matches_degeneracy():
        raise DegeneracyViolationError(f"Phases do not follow the {setup.value} degeneracy pattern",
                                       setup=setup.value, group=DEGENERACY_GROUPS[setup])
    f = phases.phase_factors
    if setup is Setup_Kind.PARALLEL:
        alpha, beta = f["alpha"], f["beta"]
        value = (1 + beta ** 4 - 2 * beta ** 2 - 4 * alpha ** 2
                 + 8 * alpha ** 2 * beta - 4 * alpha ** 2 * beta ** 2)
    elif setup is Setup_Kind.LINEAR:
        alpha, beta, lam = f["alpha"], f["beta"], f["lambda"]
        value = (1 + beta ** 4 - 2 * beta ** 2 - 4 * alpha * lam
                 + 8 * alpha * beta * lam - 4 * alpha * beta ** 2 * lam)
    else:
        mu, nu, xi = f["mu"], f["nu"], f["xi"]
        value = (mu ** 2 - 3 * nu ** 2 * xi ** 2 - 6 * mu * nu * xi
                 + 4 * xi ** 3 + 4 * mu * nu ** 3)
    return _clamp(abs(value) / 16.0, 1.0, "three-tangle")


def schmidt_weights(state: Pure_State, part: Bipartition) -> np.ndarray:
    """Squared Schmidt coefficients of the cut, largest first."""
    return hermitian_eigenvalues(reduced_density(state, part.qubit))[::-1]


def _largest_weight(state: Pure_State, qubit: int) -> float:
    rho = reduced_density(state, qubit)
    upper, lower = float(rho[0, 0].real), float(rho[1, 1].real)
    # exact 1/2 on GHZ-class states
    return 0.5 * (upper + lower + math.hypot(upper - lower, 2.0 * abs(rho[0, 1])))


def chi(state: Pure_State) -> float:
    """Largest squared Schmidt coefficient over the three one-versus-two cuts."""
    return max(_largest_weight(state, part.qubit) for part in Bipartition)


def witness_expectation(rho: Matrix_Like, reference: Pure_State) -> Witness_Report:
    """Tr(W rho) for W = chi(reference) 1 - |reference><reference|."""
    offset = chi(reference)
    fidelity = expectation_pure(rho, reference)
    return Witness_Report(chi=offset, fidelity=fidelity, expectation=offset - fidelity,
                          reference_phases=reference.phase_set)


def concurrence(rho_ab: Matrix_Like) -> float:
    """
    Concurrence of a two-qubit density matrix.

    The square roots of the eigenvalues of rho (Y rho* Y) are the singular
    values of V^T Y V for rho = V V^dagger, which avoids square roots of
    rounding noise.
    """
    array = as_complex_matrix(rho_ab)
    if array.shape != (4, 4):
        raise InvalidParameterError("Concurrence needs a 4x4 two-qubit state",
                                    field="rho_ab", value=array.shape)
    weights, vectors = np.linalg.eigh(0.5 * (array + array.conj().T))
    kept = weights > RANK_CUTOFF
    factor = vectors[:, kept] * np.sqrt(weights[kept])
    singular = np.linalg.svd(factor.T @ SIGMA_Y_PAIR @ factor, compute_uv=False)
    singular = np.concatenate([np.sort(singular)[::-1], np.zeros(4)])[:4]
    return max(0.0, float(singular[0] - singular[1] - singular[2] - singular[3]))


def three_tangle_residual(state: Pure_State) -> float:
    """tau_A|BC - C_AB^2 - C_AC^2, an independent route to the three-tangle."""
    rho_a = reduced_density(state, 1)
    linear_entropy = 4.0 * float(np.linalg.det(rho_a).real)
    c_ab = concurrence(reduced_density_pair(state, (1, 2)))
    c_ac = concurrence(reduced_density_pair(state, (1, 3)))
    return linear_entropy - c_ab ** 2 - c_ac ** 2


def analytic_gamma_threshold(chi_value: float, tau: float) -> float:
    """
    Decoherence rate at which the witness around a pure reference stops firing.

    Solves chi = ((1 + exp(-gamma tau)) / 2)^3 for gamma.
    """
    if not math.isfinite(tau) or tau <= 0:
        raise InvalidParameterError("Parameter 'tau' must be positive", field="tau", value=tau)
    if chi_value >= 1.0:
        return 0.0
    if chi_value <= 1.0 / 8.0:
        return math.inf
    return -math.log(2.0 * chi_value ** (1.0 / 3.0) - 1.0) / tau
