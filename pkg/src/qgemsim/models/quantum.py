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

"""Quantum and physical data models for QGEM Sim."""

import math
import numbers
from dataclasses import dataclass, replace
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import InvalidParameterError


#: Number of qubits in every state handled by the simulator.
N_QUBITS = 3

#: Hilbert-space dimension of three qubits.
DIMENSION = 2 ** N_QUBITS


class Setup_Kind(Enum):
    """Geometries of the three-mass experiment."""
    PARALLEL = "parallel"
    LINEAR = "linear"
    STAR = "star"


# Basis indices sharing a phase, in the order the distinct phases are numbered.
DEGENERACY_GROUPS: Dict[Setup_Kind, Tuple[Tuple[int, ...], ...]] = {
    Setup_Kind.PARALLEL: ((0b000, 0b111), (0b001, 0b011, 0b100, 0b110), (0b010, 0b101)),
    Setup_Kind.LINEAR: ((0b000, 0b111), (0b001, 0b011), (0b010, 0b101), (0b100, 0b110)),
    Setup_Kind.STAR: ((0b000,), (0b111,), (0b001, 0b010, 0b100), (0b011, 0b101, 0b110)),
}

# Names of e^{i delta} for the 2nd, 3rd (and 4th) distinct phase.
PHASE_FACTOR_NAMES: Dict[Setup_Kind, Tuple[str, ...]] = {
    Setup_Kind.PARALLEL: ("alpha", "beta"),
    Setup_Kind.LINEAR: ("alpha", "beta", "lambda"),
    Setup_Kind.STAR: ("mu", "nu", "xi"),
}


class Bipartition(Enum):
    """One-versus-two cuts of the three qubits A, B, C (qubits 1, 2, 3)."""
    A_BC = "A|BC"
    B_AC = "B|AC"
    C_AB = "C|AB"

    @property
    def qubit(self) -> int:
        """The isolated qubit, numbered 1..3."""
        return {"A|BC": 1, "B|AC": 2, "C|AB": 3}[self.value]


class State_Class(Enum):
    """Entanglement classes the symbolic classifier can return."""
    FULLY_SEPARABLE = "fully-separable"
    BISEPARABLE = "biseparable"
    GHZ = "ghz"
    GHZ_TYPE = "ghz-type"


def basis_bits(index: int) -> Tuple[int, int, int]:
    """Split a basis index into (j1, j2, j3); j1 is the most significant bit."""
    if not 0 <= index < DIMENSION:
        raise InvalidParameterError(f"Basis index out of range: {index}",
                                    field="index", value=index)
    return (index >> 2) & 1, (index >> 1) & 1, index & 1


def basis_label(index: int) -> str:
    """Ket label such as '010' for a basis index."""
    return "".join(str(bit) for bit in basis_bits(index))


@dataclass(frozen=True)
class Physical_Params:
    """Masses, lengths, time and decoherence rate of one experiment (SI units)."""
    mass: float = 1e-14
    d_min: float = 35e-6
    l: float = 10e-6
    tau: float = 2.5
    gamma: float = 0.0
    separation: Optional[float] = None  # explicit d, overrides the setup rule
    unphysical_mode: bool = False

    def __post_init__(self) -> None:
        """Validate ranges, naming the offending field."""
        strictly_positive = {"mass": self.mass, "d_min": self.d_min, "l": self.l}
        non_negative = {"tau": self.tau, "gamma": self.gamma}

        for name, value in {**strictly_positive, **non_negative}.items():
            if not isinstance(value, numbers.Real) or not math.isfinite(value):
                raise InvalidParameterError(f"Parameter '{name}' must be a finite number",
                                            field=name, value=value)
        for name, value in strictly_positive.items():
            if value <= 0:
                raise InvalidParameterError(f"Parameter '{name}' must be positive",
                                            field=name, value=value)
        for name, value in non_negative.items():
            if value < 0:
                raise InvalidParameterError(f"Parameter '{name}' must be non-negative",
                                            field=name, value=value)
        if self.separation is not None:
            if not math.isfinite(self.separation) or self.separation <= 0:
                raise InvalidParameterError("Parameter 'separation' must be positive",
                                            field="separation", value=self.separation)

    def with_changes(self, **changes: Any) -> "Physical_Params":
        """Copy with some fields replaced (validation runs again)."""
        return replace(self, **changes)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for easy serialization."""
        return {
            'mass': self.mass,
            'd_min': self.d_min,
            'l': self.l,
            'tau': self.tau,
            'gamma': self.gamma,
            'separation': self.separation,
            'unphysical_mode': self.unphysical_mode,
        }


@dataclass(frozen=True)
class Phase_Set:
    """The eight accumulated phases phi_{j1j2j3} (radians, unreduced)."""
    setup: Setup_Kind
    phases: Tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.phases) != DIMENSION:
            raise InvalidParameterError(f"A phase set needs {DIMENSION} phases, got {len(self.phases)}",
                                        field="phases", value=len(self.phases))
        if not all(math.isfinite(phase) for phase in self.phases):
            raise InvalidParameterError("Phases must be finite", field="phases")

    @classmethod
    def from_distinct(cls, setup: Setup_Kind, distinct: Sequence[float]) -> "Phase_Set":
        """Spread the setup's distinct phases over the eight basis states."""
        groups = DEGENERACY_GROUPS[setup]
        if len(distinct) != len(groups):
            raise InvalidParameterError(
                f"{setup.value} setup has {len(groups)} distinct phases, got {len(distinct)}",
                field="phases", value=len(distinct))
        phases = [0.0] * DIMENSION
        for value, group in zip(distinct, groups):
            for index in group:
                phases[index] = float(value)
        return cls(setup=setup, phases=tuple(phases))

    def __getitem__(self, index: int) -> float:
        return self.phases[index]

    @property
    def distinct_phases(self) -> Tuple[float, ...]:
        """phi_1..phi_3 (parallel) or phi_1..phi_4 (linear, star)."""
        return tuple(self.phases[group[0]] for group in DEGENERACY_GROUPS[self.setup])

    @property
    def delta_phases(self) -> Tuple[float, ...]:
        """Delta phi_i = phi_i - phi_1 for i >= 2."""
        first, *rest = self.distinct_phases
        return tuple(phase - first for phase in rest)

    @property
    def phase_factors(self) -> Dict[str, complex]:
        """Unit-modulus factors e^{i Delta phi_i}, keyed alpha/beta/lambda or mu/nu/xi."""
        names = PHASE_FACTOR_NAMES[self.setup]
        return {name: complex(np.exp(1j * delta)) for name, delta in zip(names, self.delta_phases)}

    def degeneracy_defect(self) -> float:
        """Largest spread of phases that the setup's symmetry says are equal."""
        spread = 0.0
        for group in DEGENERACY_GROUPS[self.setup]:
            values = [self.phases[index] for index in group]
            spread = max(spread, max(values) - min(values))
        return spread

    def matches_degeneracy(self, rtol: float = 1e-12) -> bool:
        """Whether the degeneracy pattern holds within a relative tolerance."""
        scale = max(1.0, max(abs(phase) for phase in self.phases))
        return self.degeneracy_defect() <= rtol * scale


@dataclass(frozen=True, eq=False)
class Pure_State:
    """Eight complex amplitudes indexed by basis index."""
    amplitudes: np.ndarray
    phase_set: Optional[Phase_Set] = None  # set when produced by gravitational evolution

    def __post_init__(self) -> None:
        amplitudes = np.asarray(self.amplitudes, dtype=complex)
        if amplitudes.shape != (DIMENSION,):
            raise InvalidParameterError(f"A three-qubit state needs {DIMENSION} amplitudes",
                                        field="amplitudes", value=amplitudes.shape)
        if not np.all(np.isfinite(amplitudes)):
            raise InvalidParameterError("Amplitudes must be finite", field="amplitudes")
        object.__setattr__(self, "amplitudes", amplitudes)

    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def is_normalized(self, tolerance: float = 1e-9) -> bool:
        return abs(self.norm_squared() - 1.0) <= tolerance

    def amplitude(self, label: str) -> complex:
        """Amplitude of a ket given as a bit string, e.g. '011'."""
        return complex(self.amplitudes[int(label, 2)])


@dataclass(frozen=True, eq=False)
class Density_Matrix:
    """8x8 density operator with the provenance of the decoherence it went through."""
    entries: np.ndarray
    phase_set: Optional[Phase_Set] = None
    gamma: Optional[float] = None
    tau: Optional[float] = None

    def __post_init__(self) -> None:
        entries = np.asarray(self.entries, dtype=complex)
        if entries.shape != (DIMENSION, DIMENSION):
            raise InvalidParameterError("A three-qubit density matrix is 8x8",
                                        field="entries", value=entries.shape)
        object.__setattr__(self, "entries", entries)

    def trace(self) -> complex:
        return complex(np.trace(self.entries))

    def purity(self) -> float:
        """Tr(rho^2)."""
        return float(np.trace(self.entries @ self.entries).real)


@dataclass(frozen=True)
class Witness_Report:
    """Outcome of evaluating W = chi*1 - |psi><psi| on a state."""
    chi: float
    fidelity: float
    expectation: float
    reference_phases: Optional[Phase_Set] = None

    @property
    def detects(self) -> bool:
        """Negative expectation (beyond numerical noise) certifies genuine entanglement."""
        return self.expectation < -1e-12


@dataclass(frozen=True)
class Classification:
    """Class of a generated pure state together with the condition that matched."""
    state_class: State_Class
    condition: str


@dataclass(frozen=True)
class Geometry_Violation:
    """Two superposition instances closer than the allowed minimum distance."""
    pair: str
    distance: float
    minimum: float


# Utility functions for building reference states

def create_basis_state(index: int) -> Pure_State:
    """|j1 j2 j3> for a basis index."""
    basis_bits(index)
    amplitudes = np.zeros(DIMENSION, dtype=complex)
    amplitudes[index] = 1.0
    return Pure_State(amplitudes)


def create_ghz_state() -> Pure_State:
    """(|000> + |111>)/sqrt(2)."""
    amplitudes = np.zeros(DIMENSION, dtype=complex)
    amplitudes[0b000] = amplitudes[0b111] = 1 / math.sqrt(2)
    return Pure_State(amplitudes)


def create_w_state() -> Pure_State:
    """(|100> + |010> + |001>)/sqrt(3)."""
    amplitudes = np.zeros(DIMENSION, dtype=complex)
    amplitudes[[0b100, 0b010, 0b001]] = 1 / math.sqrt(3)
    return Pure_State(amplitudes)


def create_product_state(qubits: List[Sequence[complex]]) -> Pure_State:
    """Normalized tensor product of three single-qubit vectors (qubit 1 first)."""
    if len(qubits) != N_QUBITS:
        raise InvalidParameterError("A product state needs three single-qubit vectors",
                                    field="qubits", value=len(qubits))
    vector = np.ones(1, dtype=complex)
    for qubit in qubits:
        single = np.asarray(qubit, dtype=complex)
        vector = np.kron(vector, single / np.linalg.norm(single))
    return Pure_State(vector)
