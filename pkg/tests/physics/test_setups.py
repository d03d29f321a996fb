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

"""Tests for the gravitational phases of the three geometries."""

import math

import numpy as np
import pytest

from qgemsim.exceptions import DegenerateGeometryError, UnphysicalGeometryError
from qgemsim.models.quantum import DEGENERACY_GROUPS, DIMENSION, Physical_Params, Setup_Kind
from qgemsim.physics.setups import (
    G,
    HBAR,
    SQRT3,
    base_separation,
    closed_form_phases,
    coupling,
    instance_distance,
    pairwise_phase,
    pairwise_phases,
    phase_summary,
    phases_from_deltas,
    star_radius,
    validate_geometry,
)


def relative_gap(first, second):
    first, second = np.asarray(first), np.asarray(second)
    return float(np.max(np.abs(first - second) / np.maximum(np.abs(second), 1e-300)))


class TestGeometry:
    """Test cases for distances and the coupling constant."""

    def test_coupling_value(self, default_params):
        """Test G m^2 tau / hbar at the defaults."""
        assert coupling(default_params) == pytest.approx(G * 1e-28 * 2.5 / HBAR)
        assert coupling(default_params) == pytest.approx(1.58223e-4, rel=1e-5)

    def test_base_separation_rules(self, default_params):
        """Test d = d_min except for linear, where d = d_min + l."""
        assert base_separation(Setup_Kind.PARALLEL, default_params) == 35e-6
        assert base_separation(Setup_Kind.STAR, default_params) == 35e-6
        assert base_separation(Setup_Kind.LINEAR, default_params) == pytest.approx(45e-6)

    def test_separation_override(self, default_params):
        """Test that an explicit separation wins over the setup rule."""
        params = default_params.with_changes(separation=50e-6)
        for setup in Setup_Kind:
            assert base_separation(setup, params) == 50e-6

    def test_star_radius(self, default_params):
        """Test R against the radical and the d = l special case."""
        d, l = 35e-6, 10e-6
        expected = math.sqrt(d * d + SQRT3 * d * l + l * l) - d

        assert star_radius(default_params) == pytest.approx(expected, rel=1e-12)
        equal = default_params.with_changes(l=35e-6)
        assert star_radius(equal) == pytest.approx(35e-6 * (math.sqrt(2 + SQRT3) - 1), rel=1e-12)

    def test_star_radius_vanishes_with_width(self, default_params):
        """Test R -> 0 as l -> 0."""
        assert star_radius(default_params.with_changes(l=1e-12)) < 1e-12

    def test_parallel_distances(self, default_params):
        """Test the parallel geometry for aligned and crossed branches."""
        d, l = 35e-6, 10e-6

        assert instance_distance(Setup_Kind.PARALLEL, default_params, 1, 2, 0, 0) == d
        assert instance_distance(Setup_Kind.PARALLEL, default_params, 1, 3, 1, 0) == \
            pytest.approx(math.sqrt(4 * d * d + l * l))

    def test_linear_distances(self, default_params):
        """Test that the closest linear instances are exactly d_min apart."""
        assert instance_distance(Setup_Kind.LINEAR, default_params, 1, 2, 1, 0) == \
            pytest.approx(35e-6)


class TestPairwisePhases:
    """Test cases for the explicit pairwise phase sum."""

    def test_parallel_first_phase(self, default_params):
        """Test phi_000 = 5 G m^2 tau / (2 hbar d), about 11.30 rad."""
        phase = pairwise_phase(Setup_Kind.PARALLEL, default_params, 0b000)

        assert phase == pytest.approx(5 * coupling(default_params) / (2 * 35e-6), rel=1e-12)
        assert phase == pytest.approx(11.30, abs=0.01)

    def test_star_first_phase(self, default_params):
        """Test phi_000 = 3 G m^2 tau / (hbar d) for the star."""
        phase = pairwise_phase(Setup_Kind.STAR, default_params, 0b000)
        assert phase == pytest.approx(3 * coupling(default_params) / 35e-6, rel=1e-12)

    @pytest.mark.parametrize("setup", list(Setup_Kind))
    def test_zero_time(self, setup, default_params):
        """Test that no interaction time means no phase."""
        phases = pairwise_phases(setup, default_params.with_changes(tau=0.0))
        assert phases.phases == (0.0,) * DIMENSION

    @pytest.mark.parametrize("setup", list(Setup_Kind))
    def test_degeneracy_exact(self, setup, default_params):
        """Test that symmetric basis states get bit-identical phases."""
        phases = pairwise_phases(setup, default_params)

        for group in DEGENERACY_GROUPS[setup]:
            assert len({phases[index] for index in group}) == 1
        assert phases.degeneracy_defect() == 0.0

    @pytest.mark.parametrize("setup", list(Setup_Kind))
    def test_scaling_law(self, setup, default_params):
        """Test that phases are linear in tau and in m^2."""
        base = np.array(pairwise_phases(setup, default_params).phases)
        longer = np.array(pairwise_phases(setup, default_params.with_changes(tau=5.0)).phases)
        heavier = np.array(pairwise_phases(setup, default_params.with_changes(mass=2e-14)).phases)

        assert relative_gap(longer, 2 * base) <= 1e-12
        assert relative_gap(heavier, 4 * base) <= 1e-12

    def test_degenerate_geometry(self):
        """Test that coinciding instances are reported."""
        params = Physical_Params(l=20e-6, separation=20e-6)

        with pytest.raises(DegenerateGeometryError) as excinfo:
            pairwise_phases(Setup_Kind.LINEAR, params)
        assert excinfo.value.field == "l"

    def test_negative_distance_needs_unphysical_mode(self):
        """Test that negative linear distances are refused by default."""
        params = Physical_Params(l=20e-6, separation=15e-6)

        with pytest.raises(UnphysicalGeometryError) as excinfo:
            pairwise_phases(Setup_Kind.LINEAR, params)
        assert excinfo.value.distance < 0

        formal = pairwise_phases(Setup_Kind.LINEAR, params.with_changes(unphysical_mode=True))
        assert all(math.isfinite(phase) for phase in formal.phases)


class TestClosedForms:
    """Test cases for the closed-form distinct phases."""

    def test_parallel_third_phase(self, default_params):
        """Test phi_010 = c (1/(2d) + 2/sqrt(d^2 + l^2))."""
        d, l = 35e-6, 10e-6
        expected = coupling(default_params) * (1 / (2 * d) + 2 / math.sqrt(d * d + l * l))

        phases = closed_form_phases(Setup_Kind.PARALLEL, default_params)
        assert phases[0b010] == pytest.approx(expected, rel=1e-12)

    def test_star_fourth_phase(self, default_params):
        """Test phi_011 = c (1/(d + sqrt3 l) + 2/(d + R))."""
        d, l = 35e-6, 10e-6
        radius = star_radius(default_params)
        expected = coupling(default_params) * (1 / (d + SQRT3 * l) + 2 / (d + radius))

        phases = closed_form_phases(Setup_Kind.STAR, default_params)
        assert phases[0b011] == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize("setup", list(Setup_Kind))
    def test_agrees_with_pairwise_sum(self, setup, random_params):
        """Test closed forms against the pairwise sum on 1000 random draws."""
        worst = 0.0
        for _ in range(1000):
            params = random_params(setup)
            worst = max(worst, relative_gap(closed_form_phases(setup, params).phases,
                                            pairwise_phases(setup, params).phases))

        assert worst <= 1e-12

    def test_linear_identity(self):
        """Test phi_2 = phi_4 = (5/3) c / d at l = sqrt(5/2) d."""
        d = 40e-6
        params = Physical_Params(l=math.sqrt(2.5) * d, separation=d, unphysical_mode=True)
        expected = 5 * coupling(params) / (3 * d)

        for phases in (closed_form_phases(Setup_Kind.LINEAR, params),
                       pairwise_phases(Setup_Kind.LINEAR, params)):
            phi1, phi2, phi3, phi4 = phases.distinct_phases
            assert abs(phi2 - phi4) <= 1e-12 * abs(phi2)
            assert phi2 == pytest.approx(expected, rel=1e-12)
            assert phi4 == pytest.approx(expected, rel=1e-12)

    def test_linear_closed_form_checks_geometry(self):
        """Test that the closed form refuses negative distances by default."""
        with pytest.raises(UnphysicalGeometryError):
            closed_form_phases(Setup_Kind.LINEAR, Physical_Params(l=20e-6, separation=15e-6))


class TestValidateGeometry:
    """Test cases for the minimum-distance check."""

    @pytest.mark.parametrize("setup", list(Setup_Kind))
    def test_defaults_are_valid(self, setup, default_params):
        """Test that the default experiment respects d_min in every setup."""
        assert validate_geometry(setup, default_params) == []

    def test_linear_wide_superposition(self, default_params):
        """Test that d = d_min + l keeps the linear setup valid for large l."""
        assert validate_geometry(Setup_Kind.LINEAR, default_params.with_changes(l=35e-6)) == []

    def test_violation_reported(self):
        """Test that l >= d in the linear setup is reported, not raised."""
        params = Physical_Params(l=30e-6, separation=25e-6, unphysical_mode=True)
        violations = validate_geometry(Setup_Kind.LINEAR, params)

        assert violations
        assert any(violation.distance < 0 for violation in violations)
        assert violations[0].minimum == 35e-6

    def test_parallel_override_below_minimum(self, default_params):
        """Test a parallel separation below d_min."""
        violations = validate_geometry(Setup_Kind.PARALLEL,
                                       default_params.with_changes(separation=20e-6))
        assert [violation.pair for violation in violations][:2] == ["1:0-2:0", "1:0-2:1"]


class TestPhaseHelpers:
    """Test cases for phase overrides and summaries."""

    def test_phases_from_deltas(self):
        """Test phi_1 = 0 and the given differences."""
        phases = phases_from_deltas(Setup_Kind.LINEAR, (0.1, 0.2, 0.3))

        assert phases.distinct_phases == (0.0, 0.1, 0.2, 0.3)
        assert phases[0b110] == 0.3

    def test_phase_summary(self, default_params):
        """Test the summary used by the phases subcommand."""
        summary = phase_summary(pairwise_phases(Setup_Kind.STAR, default_params))

        assert summary['setup'] == "star"
        assert list(summary['distinct']) == ["phi1", "phi2", "phi3", "phi4"]
        assert list(summary['deltas']) == ["dphi2", "dphi3", "dphi4"]
        assert all(abs(abs(factor) - 1.0) < 1e-12 for factor in summary['factors'].values())
