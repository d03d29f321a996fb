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

"""QGEM Sim Core - three-mass gravitational entanglement simulator."""

# Python Standard Libraries
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

# Third Party Libraries
import numpy as np

# Project Libraries
from .base import Base_Writer, Format_Detector
from .config import parse_grid
from .exceptions import (
    InvalidParameterError,
    InvalidSpecError,
    NumericalConsistencyError,
    OutputFormatError,
    QGEM_Error,
)
from .measures.classify import classify_linear, classify_parallel
from .models.quantum import Classification, Physical_Params, Setup_Kind
from .models.sweep import (
    Axis,
    Measure_Kind,
    Predicate_Kind,
    Run_Options,
    Setup_Comparison,
    Sweep_Mode,
    Sweep_Result,
    Sweep_Spec,
    Threshold_Result,
)
from .physics.setups import phase_summary
from .sweeps.comparison import compare_setups
from .sweeps.pipeline import evaluate_measures, prepare_phases
from .sweeps.sweep_runner import Sweep_Runner, result_metadata
from .sweeps.threshold import Threshold_Finder


DEFAULT_SURFACE_GRID = 101
DEFAULT_SERIES_GRID = 251
NUMERICAL_FAILURES = (np.linalg.LinAlgError, FloatingPointError, ZeroDivisionError, OverflowError)


def _enum(kind: Any, value: str, field: str) -> Any:
    try:
        return kind(value)
    except ValueError:
        choices = ", ".join(member.value for member in kind)
        raise InvalidSpecError(f"Unknown {field} '{value}' (choose from {choices})",
                               field=field, value=value)


class QGEM_Simulator:
    """
    Main controller for QGEM Sim runs.

    Turns run options into sweep specifications, runs them and writes the
    resulting tables through the registered writers.
    """

    def __init__(self):
        """Initialize the simulator with default options and writers."""
        self.logger = logging.getLogger(__name__)

        self.writers: Dict[str, Base_Writer] = {}
        self.format_detector = Format_Detector()
        self.threshold_finder = Threshold_Finder()

        self.default_options = Run_Options()

        self._initialize_components()

    def _initialize_components(self):
        """Register the built-in result writers."""
        from .writers.table_writers import CSV_Writer, JSON_Writer
        self.register_writer('csv', CSV_Writer())
        self.register_writer('json', JSON_Writer())

    def register_writer(self, format_name: str, writer: Base_Writer):
        """
        Register a writer for a specific format.

        Args:
            format_name: Format identifier (e.g., 'csv', 'json')
            writer: Writer instance
        """
        self.writers[format_name] = writer
        self.logger.info(f"Registered writer for format: {format_name}")

    # Building blocks

    def setup_of(self, options: Run_Options) -> Setup_Kind:
        return _enum(Setup_Kind, options.setup, "setup")

    def params_from_options(self, options: Run_Options) -> Physical_Params:
        """Physical parameters named in run options."""
        return Physical_Params(mass=options.mass, d_min=options.dmin, l=options.l,
                               tau=options.tau, gamma=options.gamma,
                               separation=options.separation,
                               unphysical_mode=options.unphysical_mode)

    def phase_override(self, options: Run_Options, setup: Setup_Kind) -> Optional[Tuple[float, ...]]:
        """Phase differences given in the options, or None when none were."""
        given = (options.dphi2, options.dphi3, options.dphi4)
        if all(value is None for value in given):
            return None
        wanted = given[:2] if setup is Setup_Kind.PARALLEL else given
        missing = [f"dphi{n}" for n, value in enumerate(wanted, start=2) if value is None]
        if missing and setup is not Setup_Kind.LINEAR:
            raise InvalidSpecError(f"Phase override for {setup.value} also needs {', '.join(missing)}",
                                   field=missing[0])
        # the linear phase surface only needs dphi4; the axes supply the rest
        return tuple(0.0 if value is None else value for value in wanted)

    def grid_steps(self, options: Run_Options, dimensions: int) -> Tuple[int, ...]:
        """Axis sizes from --grid; 'N' means N points on every axis."""
        if options.grid is None:
            default = DEFAULT_SURFACE_GRID if dimensions == 2 else DEFAULT_SERIES_GRID
            return (default,) * dimensions
        steps = parse_grid(options.grid)
        if len(steps) == 1:
            return steps * dimensions
        if len(steps) != dimensions:
            raise InvalidSpecError(f"Grid '{options.grid}' does not fit {dimensions} axis/axes",
                                   field="grid", value=options.grid)
        return steps

    def build_spec(self, mode: Sweep_Mode, options: Optional[Run_Options] = None,
                   setups: Optional[Tuple[Setup_Kind, ...]] = None) -> Sweep_Spec:
        """
        Translate run options into a sweep specification.

        Args:
            mode: Kind of run
            options: Run options (defaults when omitted)
            setups: Setups to include; defaults to the options' setup

        Returns:
            Validated Sweep_Spec
        """
        options = options or self.default_options
        setups = setups or (self.setup_of(options),)
        measure = _enum(Measure_Kind, options.measure, "measure")
        params = self.params_from_options(options)
        override = self.phase_override(options, setups[0])

        axes: Tuple[Axis, ...] = ()
        if mode is Sweep_Mode.PHASE_SURFACE:
            steps = self.grid_steps(options, 2)
            axes = (Axis("dphi2", *options.phi_range, steps[0]),
                    Axis("dphi3", *options.phi_range, steps[1]))
        elif mode is Sweep_Mode.LGAMMA_MAP:
            steps = self.grid_steps(options, 2)
            axes = (Axis("l", *options.l_range, steps[0]),
                    Axis("gamma", *options.gamma_range, steps[1], log_scale=options.log_gamma))
        elif mode is Sweep_Mode.TIME_SERIES:
            (steps_tau,) = self.grid_steps(options, 1)
            axes = (Axis("tau", *options.tau_range, steps_tau),)

        return Sweep_Spec(mode=mode, setups=tuple(setups), measures=(measure,), params=params,
                          axes=axes, phase_override=override, gammas=tuple(options.gammas))

    # Operations

    def run_point(self, setup: Setup_Kind, params: Physical_Params, measure: Measure_Kind,
                  phase_override: Optional[Tuple[float, ...]] = None) -> float:
        """
        Evaluate one measure at one configuration.

        Raises:
            QGEM_Error: parameter or geometry problems, naming the offending field
        """
        return self.evaluate_point(setup, params, (measure,), phase_override)[measure]

    def evaluate_point(self, setup: Setup_Kind, params: Physical_Params,
                       measures: Tuple[Measure_Kind, ...],
                       phase_override: Optional[Tuple[float, ...]] = None) -> Dict[Measure_Kind, float]:
        return self._guarded("point evaluation", evaluate_measures,
                             setup, params, measures, phase_override)

    def run_sweep(self, spec: Sweep_Spec, jobs: int = 1) -> Sweep_Result:
        """
        Run a phase-surface, l-gamma, time-series or point sweep.

        Args:
            spec: Sweep specification
            jobs: Worker threads; the result does not depend on it
        """
        runner = Sweep_Runner(jobs)
        return self._guarded(f"{spec.mode.value} sweep", runner.run, spec)

    def run_bipartition_surface(self, spec: Sweep_Spec, jobs: int = 1) -> Sweep_Result:
        """Phase surface of neg-A, neg-B and neg-C."""
        runner = Sweep_Runner(jobs)
        return self._guarded("bipartition surface", runner.run_bipartition_surface, spec)

    def find_threshold(self, setup: Setup_Kind, params: Physical_Params,
                       predicate: Predicate_Kind = Predicate_Kind.WITNESS,
                       gamma_hi: float = 1.0,
                       phase_override: Optional[Tuple[float, ...]] = None) -> Threshold_Result:
        """Largest decoherence rate at which the predicate still holds."""
        return self._guarded("threshold search", self.threshold_finder.find,
                             setup, params, predicate, gamma_hi, phase_override)

    def threshold_table(self, options: Optional[Run_Options] = None) -> Sweep_Result:
        """
        Thresholds as a result table: one row per setup and scanned value.

        ``masses`` or ``dmins`` in the options scan that parameter; both at
        once is an error.
        """
        options = options or self.default_options
        if options.masses and options.dmins:
            raise InvalidSpecError("Scan either masses or minimum distances, not both",
                                   field="masses")
        predicate = _enum(Predicate_Kind, options.predicate, "predicate")
        spec = self.build_spec(Sweep_Mode.THRESHOLD, options)
        spec = Sweep_Spec(mode=spec.mode, setups=spec.setups,
                          measures=(Measure_Kind(predicate.value),), params=spec.params,
                          phase_override=spec.phase_override)

        field, values = "mass", (options.mass,)
        if options.masses:
            values = options.masses
        elif options.dmins:
            field, values = "d_min", options.dmins

        columns = ["setup", field, "gamma_star", "iterations", "saturated"]
        result = Sweep_Result(spec=spec, columns=columns,
                              metadata=result_metadata(spec, predicate=predicate.value,
                                                       gamma_hi=options.gamma_hi))
        for value in values:
            params = spec.params.with_changes(**{field: float(value)})
            found = self.find_threshold(spec.setup, params, predicate, options.gamma_hi,
                                        spec.phase_override)
            result.add_row((spec.setup.value, float(value), found.gamma_star,
                            found.iterations, found.saturated))
        return result

    def compare_setups(self, options: Optional[Run_Options] = None, jobs: int = 1) -> Setup_Comparison:
        """Witness maps of all three setups on the options' l-gamma grid."""
        spec = self.build_spec(Sweep_Mode.LGAMMA_MAP, options)
        l_axis, gamma_axis = spec.axis("l"), spec.axis("gamma")
        return self._guarded("setup comparison", compare_setups,
                             spec.params, l_axis, gamma_axis, Sweep_Runner(jobs))

    def classify(self, setup: Setup_Kind, deltas: Tuple[float, ...],
                 eps: float = 1e-9) -> Classification:
        """Symbolic class of the parallel or linear state with the given phase differences."""
        if setup is Setup_Kind.PARALLEL and len(deltas) == 2:
            return classify_parallel(deltas[0], deltas[1], eps)
        if setup is Setup_Kind.LINEAR and len(deltas) == 3:
            return classify_linear(deltas[0], deltas[1], deltas[2], eps)
        if setup is Setup_Kind.STAR:
            raise InvalidParameterError("No symbolic classification exists for the star setup",
                                        field="setup", value=setup.value)
        raise InvalidSpecError(f"{setup.value} classification needs {2 if setup is Setup_Kind.PARALLEL else 3} "
                               "phase differences", field="phase_override", value=deltas)

    def phase_report(self, setup: Setup_Kind, params: Physical_Params) -> Dict[str, Any]:
        """Distinct phases, phase differences and phase factors of a physical configuration."""
        phases = self._guarded("phase evaluation", prepare_phases, setup, params)
        return phase_summary(phases)

    def write_result(self, result: Sweep_Result, output_file: str,
                     format_name: Optional[str] = None) -> Path:
        """
        Write a result table, choosing the writer from the format or the extension.

        Raises:
            OutputFormatError: unknown format
        """
        output_path = Path(output_file)
        format_name = format_name or self.format_detector.detect_format(output_path) or 'csv'
        if format_name not in self.writers:
            raise OutputFormatError(f"No writer available for format: {format_name}",
                                    format_name=format_name, output_file=str(output_path))
        writer = self.writers[format_name]
        if not writer.validate_output_path(output_path):
            self.logger.warning(f"Extension of {output_path} does not match format {format_name}")
        written = writer.write_result(result, output_path)
        self.logger.info(f"Wrote {result.row_count} rows to {written} ({format_name})")
        return written

    def render_result(self, result: Sweep_Result, format_name: str = 'csv') -> str:
        if format_name not in self.writers:
            raise OutputFormatError(f"No writer available for format: {format_name}",
                                    format_name=format_name)
        return self.writers[format_name].render(result)

    def get_supported_formats(self) -> List[str]:
        return list(self.writers.keys())

    def set_default_options(self, **kwargs):
        """
        Set default run options.

        Args:
            **kwargs: Default options to set
        """
        for key, value in kwargs.items():
            if hasattr(self.default_options, key):
                setattr(self.default_options, key, value)
            else:
                self.logger.warning(f"Unknown default option: {key}")

    def _guarded(self, label: str, operation, *args: Any) -> Any:
        """Run an operation, re-raising foreign exceptions as QGEM_Error or its numerical subclass."""
        try:
            return operation(*args)
        except Exception as e:
            self.logger.error(f"{label.capitalize()} failed: {e}")
            if isinstance(e, QGEM_Error):
                raise
            if isinstance(e, NUMERICAL_FAILURES):
                raise NumericalConsistencyError(f"Numerical failure during {label}: {e}")
            raise QGEM_Error(f"Unexpected error during {label}: {e}")
