"""
QGEM Sim Applications
Command-line application for QGEM Sim
"""

from .cli import main

__all__ = ["main"]
