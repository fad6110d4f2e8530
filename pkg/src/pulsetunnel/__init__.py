"""Pulse-assisted tunneling through static 1D barriers.

Semi-analytic opaque-barrier transmission spectra and full time-dependent
Schroedinger solvers for a static barrier driven by a purely time-dependent
electric-field pulse, with presets for deuterium-tritium, proton-boron and
muon-toy fusion scenarios.
"""

__version__ = "0.1.0"

from . import potentials, pulses, units  # noqa: F401
