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

"""Grid sweeps over phase space, physical parameters and time."""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, Iterable, List, Sequence, Tuple

from ..exceptions import (
    DegenerateGeometryError,
    InvalidParameterError,
    InvalidSpecError,
    UnphysicalGeometryError,
)
from ..models.quantum import Setup_Kind
from ..models.sweep import Axis, Measure_Kind, Sweep_Mode, Sweep_Result, Sweep_Spec
from ..physics.setups import G, HBAR
from .pipeline import measure_phases, override_length, prepare_phases


logger = logging.getLogger(__name__)

PHASE_AXES = ("dphi2", "dphi3")
LGAMMA_AXES = ("l", "gamma")
TIME_AXES = ("tau",)

BIPARTITION_MEASURES = (Measure_Kind.NEG_A, Measure_Kind.NEG_B, Measure_Kind.NEG_C)

Cell = Tuple[float, ...]


def result_metadata(spec: Sweep_Spec, **extra: Any) -> Dict[str, Any]:
    """Header block of every result; independent of the worker count."""
    from .. import __version__

    return {
        'spec': spec.to_dict(),
        'constants': {'G': G, 'hbar': HBAR},
        'version': __version__,
        **extra,
    }


class Sweep_Runner:
    """Evaluates sweep specifications cell by cell, in row-major order."""

    def __init__(self, jobs: int = 1):
        """
        Initialize sweep runner.

        Args:
            jobs: Number of worker threads; 1 evaluates inline
        """
        if not isinstance(jobs, int) or jobs < 1:
            raise InvalidSpecError("Worker count must be a positive integer", field="jobs", value=jobs)
        self.jobs = jobs
        self.modes: Dict[Sweep_Mode, Callable[[Sweep_Spec], Sweep_Result]] = {
            Sweep_Mode.POINT: self._run_point,
            Sweep_Mode.PHASE_SURFACE: self._run_phase_surface,
            Sweep_Mode.LGAMMA_MAP: self._run_lgamma_map,
            Sweep_Mode.TIME_SERIES: self._run_time_series,
        }

    def run(self, spec: Sweep_Spec) -> Sweep_Result:
        """
        Run a sweep.

        Args:
            spec: Sweep specification (any mode but threshold)

        Returns:
            Sweep_Result with one row per grid cell

        Raises:
            InvalidSpecError: If the axes do not fit the mode
        """
        if spec.mode not in self.modes:
            raise InvalidSpecError(f"Sweep runner cannot run mode: {spec.mode.value}",
                                   field="mode", value=spec.mode.value)
        logger.info("Starting %s sweep: %d cells, %d worker(s)",
                    spec.mode.value, spec.cell_count(), self.jobs)
        result = self.modes[spec.mode](spec)
        logger.info("Finished %s sweep with %d rows", spec.mode.value, result.row_count)
        return result

    def run_bipartition_surface(self, spec: Sweep_Spec) -> Sweep_Result:
        """Phase surface of the three one-versus-two negativities."""
        surface = Sweep_Spec(mode=Sweep_Mode.PHASE_SURFACE, setups=spec.setups,
                             measures=BIPARTITION_MEASURES, params=spec.params,
                             axes=spec.axes, phase_override=spec.phase_override)
        return self.run(surface)

    def _map(self, evaluate: Callable[[Cell], Tuple[Any, ...]],
             cells: Iterable[Cell]) -> List[Tuple[Any, ...]]:
        """Evaluate cells, possibly in parallel; output keeps the input order."""
        cells = list(cells)
        if self.jobs == 1:
            return [evaluate(cell) for cell in cells]
        with ThreadPoolExecutor(max_workers=self.jobs) as pool:
            return list(pool.map(evaluate, cells))

    def _check_axes(self, spec: Sweep_Spec, names: Sequence[str]) -> List[Axis]:
        if tuple(axis.name for axis in spec.axes) != tuple(names):
            raise InvalidSpecError(f"{spec.mode.value} sweep needs axes {', '.join(names)}",
                                   field="axes", value=[axis.name for axis in spec.axes])
        return list(spec.axes)

    def _collect(self, spec: Sweep_Spec, columns: List[str],
                 rows: List[Tuple[Any, ...]], **extra: Any) -> Sweep_Result:
        result = Sweep_Result(spec=spec, columns=columns, metadata=result_metadata(spec, **extra))
        for row in rows:
            result.add_row(row)
        return result

    def _run_point(self, spec: Sweep_Spec) -> Sweep_Result:
        if spec.axes:
            raise InvalidSpecError("A point evaluation takes no axes", field="axes")
        params = spec.params
        phases = prepare_phases(spec.setup, params, spec.phase_override)
        values = measure_phases(phases, params.gamma, params.tau, spec.measures)
        return self._collect(spec, [measure.value for measure in spec.measures], [values])

    def _run_phase_surface(self, spec: Sweep_Spec) -> Sweep_Result:
        dphi2_axis, dphi3_axis = self._check_axes(spec, PHASE_AXES)
        setup = spec.setup
        if setup is Setup_Kind.STAR:
            raise InvalidSpecError("The star setup has no two-phase surface", field="setup",
                                   value=setup.value)
        fixed: Tuple[float, ...] = ()
        if setup is Setup_Kind.LINEAR:
            if spec.phase_override is None or len(spec.phase_override) != override_length(setup):
                raise InvalidSpecError("A linear phase surface needs a fixed dphi4 override",
                                       field="dphi4")
            fixed = (spec.phase_override[2],)

        params = spec.params

        def evaluate(cell: Cell) -> Tuple[Any, ...]:
            phases = prepare_phases(setup, params, cell + fixed)
            return cell + measure_phases(phases, params.gamma, params.tau, spec.measures)

        cells = itertools.product(dphi2_axis.values(), dphi3_axis.values())
        rows = self._map(evaluate, (tuple(float(v) for v in cell) for cell in cells))
        return self._collect(spec, list(PHASE_AXES) + [m.value for m in spec.measures], rows)

    def _run_lgamma_map(self, spec: Sweep_Spec) -> Sweep_Result:
        l_axis, gamma_axis = self._check_axes(spec, LGAMMA_AXES)
        if spec.phase_override is not None:
            raise InvalidSpecError("An l-gamma map uses physical phases only",
                                   field="phase_override")
        setup = spec.setup
        base = spec.params

        def evaluate(cell: Cell) -> Tuple[Any, ...]:
            l, gamma = cell
            try:
                phases = prepare_phases(setup, base.with_changes(l=l))
            except (DegenerateGeometryError, UnphysicalGeometryError, InvalidParameterError) as e:
                logger.warning("Skipping cell l=%g gamma=%g: %s", l, gamma, e)
                return cell + (None,) * len(spec.measures)
            return cell + measure_phases(phases, gamma, base.tau, spec.measures)

        cells = itertools.product(l_axis.values(), gamma_axis.values())
        rows = self._map(evaluate, (tuple(float(v) for v in cell) for cell in cells))
        return self._collect(spec, list(LGAMMA_AXES) + [m.value for m in spec.measures], rows)

    def _run_time_series(self, spec: Sweep_Spec) -> Sweep_Result:
        (tau_axis,) = self._check_axes(spec, TIME_AXES)
        if spec.phase_override is not None:
            raise InvalidSpecError("A time series uses physical phases only",
                                   field="phase_override")
        if tau_axis.minimum < 0:
            raise InvalidSpecError("Time axis must start at tau >= 0", field="tau",
                                   value=tau_axis.minimum)
        gammas = spec.gammas or (spec.params.gamma,)
        combos = [(setup, gamma) for setup in spec.setups for gamma in gammas]
        columns = ["tau"] + [f"{setup.value}@{gamma:g}:{measure.value}"
                             for setup, gamma in combos for measure in spec.measures]
        base = spec.params

        def evaluate(cell: Cell) -> Tuple[Any, ...]:
            (tau,) = cell
            params = base.with_changes(tau=tau)
            row: Tuple[Any, ...] = cell
            phase_cache: Dict[Setup_Kind, Any] = {}
            for setup, gamma in combos:
                if setup not in phase_cache:
                    phase_cache[setup] = prepare_phases(setup, params)
                row += measure_phases(phase_cache[setup], gamma, tau, spec.measures)
            return row

        rows = self._map(evaluate, ((float(tau),) for tau in tau_axis.values()))
        return self._collect(spec, columns, rows)

