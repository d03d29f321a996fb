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

"""Tests for QGEM Sim core functionality."""

import json
import math
from unittest.mock import Mock, patch

import numpy as np
import pytest

from qgemsim.core import DEFAULT_SERIES_GRID, DEFAULT_SURFACE_GRID, QGEM_Simulator
from qgemsim.exceptions import (
    InvalidParameterError,
    InvalidSpecError,
    NumericalConsistencyError,
    OutputFormatError,
    QGEM_Error,
    UnphysicalGeometryError,
)
from qgemsim.models.quantum import Physical_Params, Setup_Kind, State_Class
from qgemsim.models.sweep import Measure_Kind, Predicate_Kind, Run_Options, Sweep_Mode


class TestQGEMSimulator:
    """Test cases for the QGEM Sim controller."""

    @pytest.fixture
    def simulator(self):
        """Create QGEM_Simulator instance."""
        return QGEM_Simulator()

    def test_initialization(self, simulator):
        """Test the registered writers and defaults."""
        assert set(simulator.get_supported_formats()) == {"csv", "json"}
        assert simulator.default_options.setup == "parallel"

    def test_register_writer(self, simulator):
        """Test writer registration."""
        mock_writer = Mock()
        simulator.register_writer('txt', mock_writer)

        assert simulator.writers['txt'] is mock_writer

    def test_set_default_options(self, simulator):
        """Test setting known and unknown default options."""
        simulator.set_default_options(setup="star", colour="red")

        assert simulator.default_options.setup == "star"
        assert not hasattr(simulator.default_options, "colour")

    def test_unknown_setup(self, simulator):
        """Test that unknown setups list the choices."""
        with pytest.raises(InvalidSpecError) as excinfo:
            simulator.setup_of(Run_Options(setup="triangle"))

        assert excinfo.value.field == "setup"
        assert "parallel" in str(excinfo.value)

    def test_params_from_options(self, simulator):
        """Test translation of option names to physical parameters."""
        params = simulator.params_from_options(Run_Options(dmin=15e-6, separation=20e-6))

        assert params.d_min == 15e-6
        assert params.separation == 20e-6


class TestPhaseOverride:
    """Test cases for phase overrides given as options."""

    @pytest.fixture
    def simulator(self):
        return QGEM_Simulator()

    def test_none_given(self, simulator):
        """Test that no dphi options means no override."""
        assert simulator.phase_override(Run_Options(), Setup_Kind.PARALLEL) is None

    def test_parallel(self, simulator):
        """Test that the parallel override ignores dphi4."""
        options = Run_Options(dphi2=0.1, dphi3=0.2, dphi4=0.3)
        assert simulator.phase_override(options, Setup_Kind.PARALLEL) == (0.1, 0.2)

    def test_parallel_incomplete(self, simulator):
        """Test that a parallel override needs both differences."""
        with pytest.raises(InvalidSpecError) as excinfo:
            simulator.phase_override(Run_Options(dphi2=0.1), Setup_Kind.PARALLEL)
        assert excinfo.value.field == "dphi3"

    def test_linear_fills_missing(self, simulator):
        """Test that the linear override fills missing differences with zero."""
        options = Run_Options(dphi4=0.5)
        assert simulator.phase_override(options, Setup_Kind.LINEAR) == (0.0, 0.0, 0.5)


class TestBuildSpec:
    """Test cases for spec construction."""

    @pytest.fixture
    def simulator(self):
        return QGEM_Simulator()

    def test_phase_surface_defaults(self, simulator):
        """Test the default surface grid over a full period."""
        spec = simulator.build_spec(Sweep_Mode.PHASE_SURFACE, Run_Options(measure="trineg"))

        assert [axis.name for axis in spec.axes] == ["dphi2", "dphi3"]
        assert spec.axes[0].steps == DEFAULT_SURFACE_GRID
        assert spec.axes[1].maximum == 2 * math.pi
        assert spec.measures == (Measure_Kind.TRINEG,)

    def test_lgamma_grid(self, simulator):
        """Test an NxM grid and a logarithmic gamma axis."""
        options = Run_Options(grid="11x21", log_gamma=True)
        spec = simulator.build_spec(Sweep_Mode.LGAMMA_MAP, options)

        assert [axis.steps for axis in spec.axes] == [11, 21]
        assert spec.axes[1].log_scale

    def test_time_series_setups(self, simulator):
        """Test a time series over all setups with listed rates."""
        options = Run_Options(gammas=(0.001, 0.1))
        spec = simulator.build_spec(Sweep_Mode.TIME_SERIES, options, setups=tuple(Setup_Kind))

        assert spec.setups == tuple(Setup_Kind)
        assert spec.axes[0].steps == DEFAULT_SERIES_GRID
        assert spec.gammas == (0.001, 0.1)

    def test_grid_mismatch(self, simulator):
        """Test that a 2-D grid does not fit a time series."""
        with pytest.raises(InvalidSpecError):
            simulator.build_spec(Sweep_Mode.TIME_SERIES, Run_Options(grid="5x5"))

    def test_unknown_measure(self, simulator):
        """Test rejection of unknown measures."""
        with pytest.raises(InvalidSpecError) as excinfo:
            simulator.build_spec(Sweep_Mode.POINT, Run_Options(measure="entropy"))
        assert excinfo.value.field == "measure"


class TestOperations:
    """Test cases for the simulator operations."""

    @pytest.fixture
    def simulator(self):
        return QGEM_Simulator()

    def test_run_point(self, simulator):
        """Test one measure at the GHZ point."""
        value = simulator.run_point(Setup_Kind.PARALLEL, Physical_Params(), Measure_Kind.WITNESS,
                                    phase_override=(0.0, math.pi))
        assert value == pytest.approx(-0.5, abs=1e-12)

    def test_run_point_geometry_error(self, simulator):
        """Test that geometry problems surface as QGEM errors naming the field."""
        with pytest.raises(UnphysicalGeometryError) as excinfo:
            simulator.run_point(Setup_Kind.PARALLEL, Physical_Params(separation=20e-6),
                                Measure_Kind.WITNESS)
        assert excinfo.value.field == "l"

    def test_foreign_errors_wrapped(self, simulator):
        """Test that unexpected exceptions become QGEM_Error."""
        with patch('qgemsim.core.evaluate_measures', side_effect=RuntimeError("boom")):
            with pytest.raises(QGEM_Error) as excinfo:
                simulator.run_point(Setup_Kind.STAR, Physical_Params(), Measure_Kind.CHI)
        assert "boom" in str(excinfo.value)

    def test_foreign_numerical_errors_wrapped(self, simulator):
        """Test that linear algebra failures become numerical errors with exit code 3."""
        with patch('qgemsim.core.evaluate_measures',
                   side_effect=np.linalg.LinAlgError("Eigenvalues did not converge")):
            with pytest.raises(NumericalConsistencyError) as excinfo:
                simulator.run_point(Setup_Kind.STAR, Physical_Params(), Measure_Kind.CHI)
        assert excinfo.value.exit_code == 3
        assert "did not converge" in str(excinfo.value)

    def test_compare_setups_reads_named_axes(self, simulator):
        """Test that the comparison takes l and gamma from the spec by name."""
        with patch('qgemsim.core.compare_setups', return_value=Mock()) as compare:
            simulator.compare_setups(Run_Options(grid="3"))
        _, l_axis, gamma_axis, _ = compare.call_args.args
        assert l_axis.name == "l"
        assert gamma_axis.name == "gamma"

    def test_run_sweep(self, simulator):
        """Test a small phase surface through the controller."""
        spec = simulator.build_spec(Sweep_Mode.PHASE_SURFACE,
                                    Run_Options(measure="tangle", grid="3"))
        result = simulator.run_sweep(spec, jobs=2)

        assert result.row_count == 9
        assert result.grid("tangle")[0, 1] == pytest.approx(1.0, abs=1e-9)

    def test_find_threshold(self, simulator):
        """Test the GHZ-point witness threshold."""
        found = simulator.find_threshold(Setup_Kind.PARALLEL, Physical_Params(),
                                         Predicate_Kind.WITNESS, phase_override=(0.0, math.pi))
        assert found.gamma_star == pytest.approx(0.2128, abs=0.002)

    def test_threshold_table_masses(self, simulator):
        """Test one row per scanned mass."""
        options = Run_Options(l=35e-6, masses=(5e-15, 1e-14))
        result = simulator.threshold_table(options)

        assert result.columns == ["setup", "mass", "gamma_star", "iterations", "saturated"]
        assert [row[1] for row in result.rows] == [5e-15, 1e-14]
        assert result.metadata['predicate'] == "witness"

    def test_threshold_table_dmins(self, simulator):
        """Test scanning the minimum distance."""
        result = simulator.threshold_table(Run_Options(dmins=(15e-6, 35e-6)))

        assert result.columns[1] == "d_min"
        assert result.rows[0][2] > result.rows[1][2]

    def test_threshold_table_both_scans(self, simulator):
        """Test that masses and dmins cannot be scanned together."""
        with pytest.raises(InvalidSpecError):
            simulator.threshold_table(Run_Options(masses=(1e-14,), dmins=(35e-6,)))

    def test_classify(self, simulator):
        """Test classification through the controller."""
        assert simulator.classify(Setup_Kind.PARALLEL, (0.0, math.pi)).state_class is State_Class.GHZ
        assert simulator.classify(Setup_Kind.LINEAR, (0.2, 0.0, -0.2)).state_class is \
            State_Class.FULLY_SEPARABLE

    def test_classify_errors(self, simulator):
        """Test star and wrong-length inputs."""
        with pytest.raises(InvalidParameterError):
            simulator.classify(Setup_Kind.STAR, (0.0, 0.0, 0.0))
        with pytest.raises(InvalidSpecError):
            simulator.classify(Setup_Kind.LINEAR, (0.0, 0.0))

    def test_phase_report(self, simulator):
        """Test the phase summary of the default parallel experiment."""
        report = simulator.phase_report(Setup_Kind.PARALLEL, Physical_Params())

        assert report['distinct']['phi1'] == pytest.approx(11.30, abs=0.01)
        assert set(report['deltas']) == {"dphi2", "dphi3"}

    def test_compare_setups(self, simulator):
        """Test the cross-setup comparison on a coarse grid."""
        comparison = simulator.compare_setups(Run_Options(grid="3x4"), jobs=2)
        assert comparison.witness[Setup_Kind.STAR].shape == (3, 4)


class TestOutput:
    """Test cases for writing results."""

    @pytest.fixture
    def simulator(self):
        return QGEM_Simulator()

    @pytest.fixture
    def result(self, simulator):
        spec = simulator.build_spec(Sweep_Mode.POINT, Run_Options(measure="chi"))
        return simulator.run_sweep(spec)

    def test_format_from_extension(self, simulator, result, tmp_path):
        """Test that .json selects the JSON writer."""
        path = simulator.write_result(result, str(tmp_path / "point.json"))
        assert json.loads(path.read_text(encoding="utf-8"))['rows'][0]['chi'] > 0.5

    def test_default_format_is_csv(self, simulator, result, tmp_path):
        """Test that unknown extensions fall back to CSV."""
        path = simulator.write_result(result, str(tmp_path / "point.dat"))
        assert path.read_text(encoding="utf-8").startswith("# spec:")

    def test_explicit_format_wins(self, simulator, result, tmp_path):
        """Test that an explicit format overrides the extension."""
        path = simulator.write_result(result, str(tmp_path / "point.csv"), "json")
        assert path.read_text(encoding="utf-8").startswith("{")

    def test_extension_mismatch_warns(self, simulator, result, tmp_path, caplog):
        """Test that a format differing from the extension is logged."""
        simulator.write_result(result, str(tmp_path / "point.csv"), "json")
        assert "does not match format json" in caplog.text

    def test_matching_extension_is_quiet(self, simulator, result, tmp_path, caplog):
        """Test that no warning is logged when extension and format agree."""
        simulator.write_result(result, str(tmp_path / "point.json"))
        assert "does not match" not in caplog.text

    def test_unknown_format(self, simulator, result):
        """Test rejection of unknown formats."""
        with pytest.raises(OutputFormatError):
            simulator.render_result(result, "xlsx")
