"""Dense linear algebra kernel for QGEM Sim."""

from .numkernel import (
    HERMITIAN_TOLERANCE,
    NORMALIZATION_TOLERANCE,
    as_complex_matrix,
    hermiticity_defect,
    hermitian_eigenvalues,
    require_normalized,
    reduced_density,
    reduced_density_pair,
    partial_trace,
    expectation_pure,
)

__all__ = [
    'HERMITIAN_TOLERANCE',
    'NORMALIZATION_TOLERANCE',
    'as_complex_matrix',
    'hermiticity_defect',
    'hermitian_eigenvalues',
    'require_normalized',
    'reduced_density',
    'reduced_density_pair',
    'partial_trace',
    'expectation_pure',
]
