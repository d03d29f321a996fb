"""Data models for QGEM Sim."""

from .quantum import (
    DIMENSION,
    N_QUBITS,
    DEGENERACY_GROUPS,
    PHASE_FACTOR_NAMES,
    Setup_Kind,
    Bipartition,
    State_Class,
    Physical_Params,
    Phase_Set,
    Pure_State,
    Density_Matrix,
    Witness_Report,
    Classification,
    Geometry_Violation,
    basis_bits,
    basis_label,
    # Utility functions
    create_basis_state,
    create_ghz_state,
    create_w_state,
    create_product_state,
)
from .sweep import (
    Measure_Kind,
    Sweep_Mode,
    Predicate_Kind,
    Axis,
    Sweep_Spec,
    Sweep_Result,
    Threshold_Result,
    Setup_Comparison,
    Run_Options,
)

__all__ = [
    'DIMENSION',
    'N_QUBITS',
    'DEGENERACY_GROUPS',
    'PHASE_FACTOR_NAMES',
    'Setup_Kind',
    'Bipartition',
    'State_Class',
    'Physical_Params',
    'Phase_Set',
    'Pure_State',
    'Density_Matrix',
    'Witness_Report',
    'Classification',
    'Geometry_Violation',
    'basis_bits',
    'basis_label',
    'create_basis_state',
    'create_ghz_state',
    'create_w_state',
    'create_product_state',
    'Measure_Kind',
    'Sweep_Mode',
    'Predicate_Kind',
    'Axis',
    'Sweep_Spec',
    'Sweep_Result',
    'Threshold_Result',
    'Setup_Comparison',
    'Run_Options',
]
