"""Exact refined torsion, spin-surface signs and torsion volume forms."""

__version__ = "0.1.0"
