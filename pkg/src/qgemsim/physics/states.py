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

"""Initial, evolved and decohered three-qubit states."""

import math

import numpy as np

from ..exceptions import InvalidParameterError
from ..models.quantum import DIMENSION, Density_Matrix, Phase_Set, Pure_State
from ..numerics.numkernel import require_normalized


#: Amplitude of every basis state in the equal superposition, 1/(2 sqrt 2).
AMPLITUDE = 1.0 / (2.0 * math.sqrt(2.0))

#: Off-diagonal element (i, j) is damped by exp(-HAMMING_TABLE[i, j] * gamma * tau).
HAMMING_TABLE = np.array([[bin(i ^ j).count("1") for j in range(DIMENSION)]
                          for i in range(DIMENSION)], dtype=int)


def initial_state() -> Pure_State:
    """Each mass in (|0> + |1>)/sqrt(2): all eight amplitudes 1/(2 sqrt 2)."""
    return Pure_State(np.full(DIMENSION, AMPLITUDE, dtype=complex))


def evolved_state(phases: Phase_Set) -> Pure_State:
    """Initial state after each branch picked up its gravitational phase."""
    amplitudes = AMPLITUDE * np.exp(1j * np.asarray(phases.phases, dtype=float))
    return Pure_State(amplitudes, phase_set=phases)


def pure_density(state: Pure_State) -> Density_Matrix:
    """Rank-one projector |psi><psi|."""
    require_normalized(state)
    vector = state.amplitudes
    return Density_Matrix(np.outer(vector, vector.conj()), phase_set=state.phase_set)


def hamming_delta(i: int, j: int) -> int:
    """Number of qubits whose bra and ket bits differ."""
    for index in (i, j):
        if not 0 <= index < DIMENSION:
            raise InvalidParameterError(f"Basis index out of range: {index}",
                                        field="index", value=index)
    return int(HAMMING_TABLE[i, j])


def _check_rate_and_time(gamma: float, tau: float) -> None:
    for name, value in (("gamma", gamma), ("tau", tau)):
        if not math.isfinite(value) or value < 0:
            raise InvalidParameterError(f"Parameter '{name}' must be a finite non-negative number",
                                        field=name, value=value)


def dephasing_factors(gamma: float, tau: float) -> np.ndarray:
    """8x8 matrix of exp(-delta(i, j) gamma tau)."""
    _check_rate_and_time(gamma, tau)
    # exp underflows to 0 for huge gamma*tau, which is the maximally mixed limit
    return np.exp(-HAMMING_TABLE * (gamma * tau))


def apply_dephasing(rho: Density_Matrix, gamma: float, tau: float) -> Density_Matrix:
    """
    Damp the off-diagonal elements of an existing density matrix.

    Applying (gamma, tau1) and then (gamma, tau2) damps exactly like a single
    application at (gamma, tau1 + tau2).
    """
    entries = rho.entries * dephasing_factors(gamma, tau)
    total = tau if rho.tau is None else rho.tau + tau
    return Density_Matrix(entries, phase_set=rho.phase_set, gamma=gamma, tau=total)


def decohered_state(phases: Phase_Set, gamma: float, tau: float) -> Density_Matrix:
    """
    rho_ij = (1/8) exp(-delta(i, j) gamma tau) exp(i (phi_i - phi_j)).

    The diagonal is exactly 1/8 whatever the phases are.
    """
    factors = dephasing_factors(gamma, tau)
    rotation = np.exp(1j * np.asarray(phases.phases, dtype=float))
    entries = np.outer(rotation, rotation.conj()) * factors / DIMENSION
    np.fill_diagonal(entries, 1.0 / DIMENSION)
    return Density_Matrix(entries, phase_set=phases, gamma=gamma, tau=tau)


def maximally_mixed() -> Density_Matrix:
    """I/8."""
    return Density_Matrix(np.eye(DIMENSION, dtype=complex) / DIMENSION)
