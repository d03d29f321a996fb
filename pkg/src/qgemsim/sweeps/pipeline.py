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

"""Single evaluation pipeline: phases, evolved state, decohered state, measures."""

import logging
from typing import Dict, Optional, Sequence, Tuple

from ..exceptions import InvalidSpecError, UnphysicalGeometryError
from ..measures.entanglement import (
    chi,
    negativity,
    three_tangle_pure,
    tripartite_negativity,
    witness_expectation,
)
from ..models.quantum import DEGENERACY_GROUPS, Bipartition, Phase_Set, Physical_Params, Setup_Kind
from ..models.sweep import Measure_Kind
from ..physics.setups import pairwise_phases, phases_from_deltas, validate_geometry
from ..physics.states import decohered_state, evolved_state


logger = logging.getLogger(__name__)

_BIPARTITION_OF = {
    Measure_Kind.NEG_A: Bipartition.A_BC,
    Measure_Kind.NEG_B: Bipartition.B_AC,
    Measure_Kind.NEG_C: Bipartition.C_AB,
}


def override_length(setup: Setup_Kind) -> int:
    """Number of phase differences that pin down a setup's phase set."""
    return len(DEGENERACY_GROUPS[setup]) - 1


def prepare_phases(setup: Setup_Kind, params: Physical_Params,
                   phase_override: Optional[Sequence[float]] = None) -> Phase_Set:
    """
    Phase set of one configuration.

    With ``phase_override`` the phase differences are taken as given and the
    geometry is not consulted at all.
    """
    if phase_override is not None:
        if len(phase_override) != override_length(setup):
            raise InvalidSpecError(
                f"{setup.value} setup needs {override_length(setup)} phase differences",
                field="phase_override", value=tuple(phase_override))
        return phases_from_deltas(setup, tuple(phase_override))

    if not params.unphysical_mode:
        violations = validate_geometry(setup, params)
        if violations:
            first = violations[0]
            raise UnphysicalGeometryError(
                f"Instances {first.pair} are {first.distance:.6g} m apart, "
                f"below d_min = {first.minimum:.6g} m",
                setup=setup.value, pair=first.pair, distance=first.distance)
    return pairwise_phases(setup, params)


def measure_phases(phases: Phase_Set, gamma: float, tau: float,
                   measures: Sequence[Measure_Kind]) -> Tuple[float, ...]:
    """Measures of the state with the given phases after dephasing at (gamma, tau)."""
    reference = evolved_state(phases)
    rho = decohered_state(phases, gamma, tau)
    values = []
    for measure in measures:
        if measure in _BIPARTITION_OF:
            values.append(negativity(rho, _BIPARTITION_OF[measure]))
        elif measure is Measure_Kind.TRINEG:
            values.append(tripartite_negativity(rho))
        elif measure is Measure_Kind.TANGLE:
            values.append(three_tangle_pure(reference))
        elif measure is Measure_Kind.CHI:
            values.append(chi(reference))
        else:
            values.append(witness_expectation(rho, reference).expectation)
    return tuple(values)


def evaluate_measures(setup: Setup_Kind, params: Physical_Params,
                      measures: Sequence[Measure_Kind],
                      phase_override: Optional[Sequence[float]] = None) -> Dict[Measure_Kind, float]:
    """Every requested measure at one configuration, keyed by measure."""
    phases = prepare_phases(setup, params, phase_override)
    values = measure_phases(phases, params.gamma, params.tau, measures)
    logger.debug("Evaluated %s at %s: %s", setup.value, params, values)
    return dict(zip(measures, values))
