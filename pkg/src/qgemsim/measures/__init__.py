"""Entanglement measures and symbolic classification."""

from .entanglement import (
    partial_transpose,
    negativity,
    bipartition_negativities,
    tripartite_negativity,
    three_tangle_pure,
    three_tangle_closed,
    schmidt_weights,
    chi,
    witness_expectation,
    concurrence,
    three_tangle_residual,
    analytic_gamma_threshold,
)
from .classify import (
    DEFAULT_EPS,
    classify_parallel,
    classify_linear,
    classify_phases,
)

__all__ = [
    'partial_transpose',
    'negativity',
    'bipartition_negativities',
    'tripartite_negativity',
    'three_tangle_pure',
    'three_tangle_closed',
    'schmidt_weights',
    'chi',
    'witness_expectation',
    'concurrence',
    'three_tangle_residual',
    'analytic_gamma_threshold',
    'DEFAULT_EPS',
    'classify_parallel',
    'classify_linear',
    'classify_phases',
]
