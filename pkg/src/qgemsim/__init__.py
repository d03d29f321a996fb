"""
QGEM Sim - three-qubit gravitationally induced entanglement simulator.
Phases, decoherence, entanglement measures, witnesses and sweeps for three
masses in parallel, linear and star geometries.
"""

__version__ = "0.1.0"

from .core import QGEM_Simulator

__all__ = ["QGEM_Simulator", "__version__"]
