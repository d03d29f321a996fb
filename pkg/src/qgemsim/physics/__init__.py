"""Gravitational phases and the states they produce."""

from .setups import (
    G,
    HBAR,
    base_separation,
    coupling,
    star_radius,
    instance_distance,
    pairwise_phase,
    pairwise_phases,
    closed_form_phases,
    phases_from_deltas,
    validate_geometry,
    phase_summary,
)
from .states import (
    AMPLITUDE,
    HAMMING_TABLE,
    initial_state,
    evolved_state,
    pure_density,
    hamming_delta,
    dephasing_factors,
    apply_dephasing,
    decohered_state,
    maximally_mixed,
)

__all__ = [
    'G',
    'HBAR',
    'base_separation',
    'coupling',
    'star_radius',
    'instance_distance',
    'pairwise_phase',
    'pairwise_phases',
    'closed_form_phases',
    'phases_from_deltas',
    'validate_geometry',
    'phase_summary',
    'AMPLITUDE',
    'HAMMING_TABLE',
    'initial_state',
    'evolved_state',
    'pure_density',
    'hamming_delta',
    'dephasing_factors',
    'apply_dephasing',
    'decohered_state',
    'maximally_mixed',
]
