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

"""Sweep, threshold and run-option models for QGEM Sim."""

import math
from dataclasses import dataclass, field, fields
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..exceptions import InvalidSpecError
from .quantum import Physical_Params, Setup_Kind


class Measure_Kind(Enum):
    """Quantities a sweep cell can report."""
    NEG_A = "neg-A"
    NEG_B = "neg-B"
    NEG_C = "neg-C"
    TRINEG = "trineg"
    TANGLE = "tangle"
    CHI = "chi"
    WITNESS = "witness"

    @property
    def uses_reference(self) -> bool:
        """Measures evaluated on the decoherence-free reference state."""
        return self in (Measure_Kind.TANGLE, Measure_Kind.CHI, Measure_Kind.WITNESS)


class Sweep_Mode(Enum):
    """Kinds of run the simulator can perform."""
    PHASE_SURFACE = "phase-surface"
    LGAMMA_MAP = "lgamma-map"
    TIME_SERIES = "time-series"
    THRESHOLD = "threshold"
    POINT = "point"


class Predicate_Kind(Enum):
    """Detection criteria used by the threshold finder."""
    WITNESS = "witness"
    TRINEG = "trineg"


@dataclass(frozen=True)
class Axis:
    """One inclusive, uniformly (or logarithmically) spaced sweep axis."""
    name: str
    minimum: float
    maximum: float
    steps: int
    log_scale: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.steps, int) or self.steps < 2:
            raise InvalidSpecError(f"Axis '{self.name}' needs at least 2 steps",
                                   field=self.name, value=self.steps)
        if not (math.isfinite(self.minimum) and math.isfinite(self.maximum)):
            raise InvalidSpecError(f"Axis '{self.name}' bounds must be finite",
                                   field=self.name)
        if not self.minimum < self.maximum:
            raise InvalidSpecError(f"Axis '{self.name}' needs min < max",
                                   field=self.name, value=(self.minimum, self.maximum))
        if self.log_scale and self.minimum <= 0:
            raise InvalidSpecError(f"Logarithmic axis '{self.name}' needs a positive minimum",
                                   field=self.name, value=self.minimum)

    def values(self) -> np.ndarray:
        """Grid points, endpoints included exactly."""
        if self.log_scale:
            grid = np.geomspace(self.minimum, self.maximum, self.steps)
        else:
            grid = np.linspace(self.minimum, self.maximum, self.steps)
        grid[0], grid[-1] = self.minimum, self.maximum
        return grid

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'min': self.minimum,
            'max': self.maximum,
            'steps': self.steps,
            'log_scale': self.log_scale,
        }


@dataclass(frozen=True)
class Sweep_Spec:
    """Everything needed to reproduce one sweep."""
    mode: Sweep_Mode
    setups: Tuple[Setup_Kind, ...]
    measures: Tuple[Measure_Kind, ...]
    params: Physical_Params
    axes: Tuple[Axis, ...] = ()
    phase_override: Optional[Tuple[float, ...]] = None  # (dphi2, dphi3[, dphi4])
    gammas: Tuple[float, ...] = ()

    def __post_init__(self) -> None:
        if not self.setups:
            raise InvalidSpecError("A sweep needs at least one setup", field="setup")
        if not self.measures:
            raise InvalidSpecError("A sweep needs at least one measure", field="measure")
        names = [axis.name for axis in self.axes]
        if len(set(names)) != len(names):
            raise InvalidSpecError("Axis names must be unique", field="axes", value=names)
        for gamma in self.gammas:
            if not math.isfinite(gamma) or gamma < 0:
                raise InvalidSpecError("Decoherence rates must be non-negative",
                                       field="gammas", value=gamma)

    @property
    def setup(self) -> Setup_Kind:
        """Primary setup of the sweep."""
        return self.setups[0]

    def axis(self, name: str) -> Axis:
        for axis in self.axes:
            if axis.name == name:
                return axis
        raise InvalidSpecError(f"Sweep has no axis named '{name}'", field="axes", value=name)

    def cell_count(self) -> int:
        return int(np.prod([axis.steps for axis in self.axes])) if self.axes else 1

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for easy serialization."""
        return {
            'mode': self.mode.value,
            'setups': [setup.value for setup in self.setups],
            'measures': [measure.value for measure in self.measures],
            'params': self.params.to_dict(),
            'axes': [axis.to_dict() for axis in self.axes],
            'phase_override': list(self.phase_override) if self.phase_override else None,
            'gammas': list(self.gammas),
        }


@dataclass
class Sweep_Result:
    """Row-major result table of a sweep."""
    spec: Sweep_Spec
    columns: List[str]
    rows: List[Tuple[Any, ...]] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    def add_row(self, row: Tuple[Any, ...]) -> None:
        if len(row) != len(self.columns):
            raise InvalidSpecError(f"Row has {len(row)} values for {len(self.columns)} columns",
                                   field="row", value=len(row))
        self.rows.append(tuple(row))

    @property
    def row_count(self) -> int:
        return len(self.rows)

    def column(self, name: str) -> np.ndarray:
        """Values of one column as a float array (missing values become NaN)."""
        if name not in self.columns:
            raise InvalidSpecError(f"Unknown column '{name}'", field="column", value=name)
        position = self.columns.index(name)
        return np.array([np.nan if row[position] is None else row[position]
                         for row in self.rows], dtype=float)

    def grid(self, name: str) -> np.ndarray:
        """A column reshaped to the spec's axis shape."""
        shape = tuple(axis.steps for axis in self.spec.axes)
        return self.column(name).reshape(shape)


@dataclass(frozen=True)
class Threshold_Result:
    """Largest decoherence rate at which a detection predicate still holds."""
    setup: Setup_Kind
    predicate: Predicate_Kind
    gamma_star: float
    iterations: int
    samples: Tuple[Tuple[float, bool], ...]
    saturated: bool = False  # predicate still held at the upper bracket


@dataclass(frozen=True)
class Setup_Comparison:
    """Witness values of all three setups on a common l-gamma grid."""
    l_values: np.ndarray
    gamma_values: np.ndarray
    witness: Dict[Setup_Kind, np.ndarray]
    pairwise_max_difference: Dict[str, float]
    dynamic_range: float
    near_equivalent: bool


@dataclass
class Run_Options:
    """Options shared by every CLI subcommand; config files use the same names."""
    setup: str = "parallel"
    mass: float = 1e-14
    dmin: float = 35e-6
    l: float = 10e-6
    tau: float = 2.5
    gamma: float = 0.0
    separation: Optional[float] = None
    measure: str = "witness"
    out: Optional[str] = None
    format: Optional[str] = None
    grid: Optional[str] = None
    log_gamma: bool = False
    unphysical_mode: bool = False
    jobs: int = 1
    phi_range: Tuple[float, float] = (0.0, 2 * math.pi)
    l_range: Tuple[float, float] = (1e-6, 35e-6)
    gamma_range: Tuple[float, float] = (1e-4, 0.2)
    tau_range: Tuple[float, float] = (0.0, 2.5)
    gammas: Tuple[float, ...] = ()
    masses: Tuple[float, ...] = ()
    dmins: Tuple[float, ...] = ()
    dphi2: Optional[float] = None
    dphi3: Optional[float] = None
    dphi4: Optional[float] = None
    predicate: str = "witness"
    gamma_hi: float = 1.0
    eps: float = 1e-9
    verbose: int = 0

    @classmethod
    def option_names(cls) -> List[str]:
        return [option.name for option in fields(cls)]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for easy serialization."""
        return {option.name: getattr(self, option.name) for option in fields(self)}
