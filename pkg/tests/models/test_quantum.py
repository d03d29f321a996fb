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

"""Tests for quantum and physical data models."""

import math

import numpy as np
import pytest

from qgemsim.exceptions import InvalidParameterError
from qgemsim.models.quantum import (
    DEGENERACY_GROUPS,
    DIMENSION,
    Bipartition,
    Phase_Set,
    Physical_Params,
    Pure_State,
    Setup_Kind,
    Witness_Report,
    basis_bits,
    basis_label,
    create_basis_state,
    create_ghz_state,
    create_product_state,
    create_w_state,
)


class TestPhysicalParams:
    """Test cases for Physical_Params validation."""

    def test_defaults(self):
        """Test the default experiment values."""
        params = Physical_Params()

        assert params.mass == 1e-14
        assert params.d_min == 35e-6
        assert params.l == 10e-6
        assert params.tau == 2.5
        assert params.gamma == 0.0
        assert params.separation is None
        assert params.unphysical_mode is False

    @pytest.mark.parametrize("field, value", [
        ("mass", 0.0),
        ("mass", -1e-14),
        ("d_min", 0.0),
        ("l", -1e-6),
        ("tau", -0.1),
        ("gamma", -1e-3),
        ("gamma", math.nan),
        ("mass", math.inf),
        ("separation", 0.0),
    ])
    def test_invalid_values_name_the_field(self, field, value):
        """Test that out-of-range values are rejected with the field name."""
        with pytest.raises(InvalidParameterError) as excinfo:
            Physical_Params(**{field: value})

        assert excinfo.value.field == field

    def test_zero_time_and_rate_allowed(self):
        """Test that tau = 0 and gamma = 0 are valid."""
        params = Physical_Params(tau=0.0, gamma=0.0)
        assert params.tau == 0.0

    def test_with_changes_revalidates(self):
        """Test that copies are validated again."""
        params = Physical_Params()

        assert params.with_changes(l=20e-6).l == 20e-6
        with pytest.raises(InvalidParameterError):
            params.with_changes(mass=-1.0)

    def test_to_dict(self):
        """Test dictionary conversion."""
        data = Physical_Params(gamma=0.1).to_dict()

        assert data['gamma'] == 0.1
        assert set(data) == {'mass', 'd_min', 'l', 'tau', 'gamma', 'separation',
                             'unphysical_mode'}


class TestBasis:
    """Test cases for basis index helpers."""

    def test_bit_order(self):
        """Test that qubit 1 is the most significant bit."""
        assert basis_bits(0b100) == (1, 0, 0)
        assert basis_bits(0b001) == (0, 0, 1)
        assert basis_label(0b011) == "011"

    @pytest.mark.parametrize("index", [-1, 8])
    def test_out_of_range(self, index):
        """Test rejection of indices outside 0..7."""
        with pytest.raises(InvalidParameterError):
            basis_bits(index)


class TestPhaseSet:
    """Test cases for Phase_Set."""

    def test_from_distinct_parallel(self):
        """Test spreading three distinct phases over the parallel groups."""
        phases = Phase_Set.from_distinct(Setup_Kind.PARALLEL, (1.0, 2.0, 3.0))

        assert phases[0b000] == phases[0b111] == 1.0
        assert phases[0b001] == phases[0b011] == phases[0b100] == phases[0b110] == 2.0
        assert phases[0b010] == phases[0b101] == 3.0
        assert phases.distinct_phases == (1.0, 2.0, 3.0)
        assert phases.delta_phases == (1.0, 2.0)

    def test_from_distinct_wrong_count(self):
        """Test that the number of distinct phases must fit the setup."""
        with pytest.raises(InvalidParameterError):
            Phase_Set.from_distinct(Setup_Kind.LINEAR, (0.0, 1.0, 2.0))

    def test_needs_eight_phases(self):
        """Test that a phase set holds exactly eight phases."""
        with pytest.raises(InvalidParameterError):
            Phase_Set(setup=Setup_Kind.STAR, phases=(0.0,) * 7)

    def test_groups_cover_every_basis_state(self):
        """Test that each setup's degeneracy groups partition the basis."""
        for setup, groups in DEGENERACY_GROUPS.items():
            members = sorted(index for group in groups for index in group)
            assert members == list(range(DIMENSION)), setup

    def test_phase_factor_names(self):
        """Test the factor names of each setup."""
        star = Phase_Set.from_distinct(Setup_Kind.STAR, (0.0, math.pi, 0.5, 1.0))
        factors = star.phase_factors

        assert set(factors) == {"mu", "nu", "xi"}
        assert factors["mu"] == pytest.approx(-1.0)
        assert abs(factors["nu"]) == pytest.approx(1.0)

    def test_degeneracy_check(self):
        """Test detection of phases that break the degeneracy pattern."""
        good = Phase_Set.from_distinct(Setup_Kind.PARALLEL, (0.0, 1.0, 2.0))
        broken = Phase_Set(setup=Setup_Kind.PARALLEL,
                           phases=(0.0, 1.0, 2.0, 1.0, 1.0, 2.0, 1.5, 0.0))

        assert good.matches_degeneracy()
        assert not broken.matches_degeneracy()
        assert broken.degeneracy_defect() == pytest.approx(0.5)


class TestStates:
    """Test cases for reference state constructors."""

    def test_ghz_state(self):
        """Test the GHZ amplitudes."""
        ghz = create_ghz_state()

        assert ghz.is_normalized()
        assert ghz.amplitude("000") == pytest.approx(1 / math.sqrt(2))
        assert ghz.amplitude("111") == pytest.approx(1 / math.sqrt(2))

    def test_w_state(self):
        """Test the W amplitudes."""
        w = create_w_state()

        assert w.is_normalized()
        assert w.amplitude("010") == pytest.approx(1 / math.sqrt(3))
        assert w.amplitude("011") == 0

    def test_basis_state(self):
        """Test a computational basis state."""
        state = create_basis_state(0b101)
        assert state.amplitude("101") == 1

    def test_product_state_normalizes(self):
        """Test that product factors are normalized."""
        state = create_product_state([[1, 1], [1, 0], [0, 2]])

        assert state.is_normalized()
        assert state.amplitude("001") == pytest.approx(1 / math.sqrt(2))
        assert state.amplitude("101") == pytest.approx(1 / math.sqrt(2))

    def test_pure_state_shape(self):
        """Test rejection of a wrong number of amplitudes."""
        with pytest.raises(InvalidParameterError):
            Pure_State(np.ones(4))

    def test_pure_state_finite(self):
        """Test rejection of non-finite amplitudes."""
        amplitudes = np.ones(DIMENSION, dtype=complex)
        amplitudes[3] = np.nan
        with pytest.raises(InvalidParameterError):
            Pure_State(amplitudes)


class TestSmallModels:
    """Test cases for the small result models."""

    def test_bipartition_qubits(self):
        """Test the isolated qubit of each cut."""
        assert [part.qubit for part in Bipartition] == [1, 2, 3]

    def test_witness_report_detects(self):
        """Test the detection flag of a witness report."""
        assert Witness_Report(chi=0.5, fidelity=1.0, expectation=-0.5).detects
        assert not Witness_Report(chi=0.5, fidelity=0.5, expectation=0.0).detects
