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
Gravitational phases of the parallel, linear and star geometries.

Every basis state |j1 j2 j3> picks up phi = sum_{i<k} G m^2 tau / (hbar r_ik),
where r_ik is the distance between the branch j_i of mass i and the branch
j_k of mass k. ``pairwise_phase`` evaluates that sum directly from the
geometry; ``closed_form_phases`` uses the per-setup closed forms for the
distinct phases. The two must agree to rounding.
"""

import logging
import math
from typing import Dict, List, Tuple

from ..exceptions import DegenerateGeometryError, UnphysicalGeometryError
from ..models.quantum import (
    DIMENSION,
    Geometry_Violation,
    Phase_Set,
    Physical_Params,
    Setup_Kind,
    basis_bits,
)


logger = logging.getLogger(__name__)

#: Newtonian constant of gravitation, CODATA 2018 (m^3 kg^-1 s^-2).
G = 6.67430e-11

#: Reduced Planck constant, CODATA 2018 (J s).
HBAR = 1.054571817e-34

#: Slack allowed when comparing distances against d_min (m).
GEOMETRY_TOLERANCE = 1e-12

SQRT3 = math.sqrt(3.0)

PAIRS: Tuple[Tuple[int, int], ...] = ((1, 2), (1, 3), (2, 3))


def base_separation(setup: Setup_Kind, params: Physical_Params) -> float:
    """Distance d between neighbouring |0> branches."""
    if params.separation is not None:
        return params.separation
    if setup is Setup_Kind.LINEAR:
        return params.d_min + params.l
    return params.d_min


def star_radius(params: Physical_Params) -> float:
    """R = sqrt(d^2 + sqrt(3) d l + l^2) - d, evaluated without cancellation."""
    d = base_separation(Setup_Kind.STAR, params)
    l = params.l
    return (SQRT3 * d * l + l * l) / (math.sqrt(d * d + SQRT3 * d * l + l * l) + d)


def coupling(params: Physical_Params) -> float:
    """G m^2 tau / hbar, in rad * m."""
    return G * params.mass ** 2 * params.tau / HBAR


def instance_distance(setup: Setup_Kind, params: Physical_Params,
                      i: int, k: int, j_i: int, j_k: int) -> float:
    """Signed distance between branch j_i of mass i and branch j_k of mass k (i < k)."""
    d = base_separation(setup, params)
    l = params.l
    if setup is Setup_Kind.PARALLEL:
        return math.sqrt((d * (k - i)) ** 2 + (l * (j_i - j_k)) ** 2)
    if setup is Setup_Kind.LINEAR:
        return (k - i) * d + l * (j_k - j_i)
    both = j_i * j_k
    return (1 - both) * d + both * (d + SQRT3 * l) + abs(j_k - j_i) * star_radius(params)


def _pair_label(i: int, k: int, j_i: int, j_k: int) -> str:
    return f"{i}:{j_i}-{k}:{j_k}"


def _check_distance(setup: Setup_Kind, params: Physical_Params, label: str,
                    distance: float) -> None:
    if distance == 0.0:
        raise DegenerateGeometryError(f"Superposition instances {label} coincide",
                                      setup=setup.value, pair=label)
    if distance < 0.0 and not params.unphysical_mode:
        raise UnphysicalGeometryError(
            f"Phase formula needs a negative distance for {label}; "
            "enable unphysical mode to evaluate it formally",
            setup=setup.value, pair=label, distance=distance)


def pairwise_phase(setup: Setup_Kind, params: Physical_Params, index: int) -> float:
    """Phase of basis state ``index`` from the explicit sum over mass pairs."""
    bits = basis_bits(index)
    scale = coupling(params)
    terms = []
    for i, k in PAIRS:
        j_i, j_k = bits[i - 1], bits[k - 1]
        distance = instance_distance(setup, params, i, k, j_i, j_k)
        _check_distance(setup, params, _pair_label(i, k, j_i, j_k), distance)
        terms.append(scale / distance)
    # fsum: equal multisets of terms give bit-identical phases
    return math.fsum(terms)


def pairwise_phases(setup: Setup_Kind, params: Physical_Params) -> Phase_Set:
    """All eight phases from the pairwise sum."""
    return Phase_Set(setup=setup,
                     phases=tuple(pairwise_phase(setup, params, index) for index in range(DIMENSION)))


def closed_form_phases(setup: Setup_Kind, params: Physical_Params) -> Phase_Set:
    """All eight phases from the per-setup closed forms of the distinct phases."""
    c = coupling(params)
    d = base_separation(setup, params)
    l = params.l

    if setup is Setup_Kind.PARALLEL:
        near = math.sqrt(d * d + l * l)
        far = math.sqrt(4 * d * d + l * l)
        distinct = (
            5 * c / (2 * d),
            c * (1 / d + 1 / far + 1 / near),
            c * (1 / (2 * d) + 2 / near),
        )
    elif setup is Setup_Kind.LINEAR:
        _check_distance(setup, params, _pair_label(1, 2, 1, 0), d - l)
        _check_distance(setup, params, _pair_label(1, 3, 1, 0), 2 * d - l)
        distinct = (
            5 * c / (2 * d),
            c * (1 / d + 1 / (d + l) + 1 / (2 * d + l)),
            c * (1 / (2 * d) + 1 / (d + l) + 1 / (d - l)),
            c * (1 / d + 1 / (d - l) + 1 / (2 * d - l)),
        )
    else:
        radius = star_radius(params)
        wide = d + SQRT3 * l
        distinct = (
            3 * c / d,
            3 * c / wide,
            c * (1 / d + 2 / (d + radius)),
            c * (1 / wide + 2 / (d + radius)),
        )

    logger.debug("Closed-form phases for %s setup: %s", setup.value, distinct)
    return Phase_Set.from_distinct(setup, distinct)


def phases_from_deltas(setup: Setup_Kind, deltas: Tuple[float, ...]) -> Phase_Set:
    """Phase set with phi_1 = 0 and the given Delta phi_2, Delta phi_3 (, Delta phi_4)."""
    return Phase_Set.from_distinct(setup, (0.0,) + tuple(float(delta) for delta in deltas))


def validate_geometry(setup: Setup_Kind, params: Physical_Params) -> List[Geometry_Violation]:
    """
    Report every pair of superposition instances closer than d_min.

    Never raises; an empty list means the geometry is physically admissible.
    """
    violations = []
    for i, k in PAIRS:
        for j_i in (0, 1):
            for j_k in (0, 1):
                distance = instance_distance(setup, params, i, k, j_i, j_k)
                if distance < params.d_min - GEOMETRY_TOLERANCE:
                    violations.append(Geometry_Violation(pair=_pair_label(i, k, j_i, j_k),
                                                         distance=distance,
                                                         minimum=params.d_min))
    return violations


def phase_summary(phase_set: Phase_Set) -> Dict[str, object]:
    """Distinct phases, phase differences and phase factors of a phase set."""
    distinct = phase_set.distinct_phases
    return {
        'setup': phase_set.setup.value,
        'distinct': {f"phi{n}": value for n, value in enumerate(distinct, start=1)},
        'deltas': {f"dphi{n}": value for n, value in enumerate(phase_set.delta_phases, start=2)},
        'factors': phase_set.phase_factors,
    }
