"""Sweeps, threshold search and setup comparison."""

from .pipeline import evaluate_measures, measure_phases, prepare_phases
from .sweep_runner import Sweep_Runner, result_metadata
from .threshold import Threshold_Finder, predicate_holds
from .comparison import compare_setups

__all__ = [
    'evaluate_measures',
    'measure_phases',
    'prepare_phases',
    'Sweep_Runner',
    'result_metadata',
    'Threshold_Finder',
    'predicate_holds',
    'compare_setups',
]
