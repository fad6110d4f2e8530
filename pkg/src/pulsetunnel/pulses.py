"""Time-dependent vector potentials and their quiver displacement.

A purely time-dependent field maps exactly onto a displacement chi(t) of
the wavefunction with chi'(t) = -q*A(t)/m.  The module evaluates A(t),
chi(t), the net displacement, and the analytic continuation chi(t + iT)
to complex time that the opaque-barrier spectra are built from.

Vector potentials are stored as e*A in keV; multiplying by the charge in
units of e gives a momentum.  A positive ``a_offset`` models the pure
gauge transformation A -> A + const (the quiver then acquires a linear
drift, anchored so chi(t_anchor) keeps its pulse-only value).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import (ConfigurationError, SingularityError,
                     UnsupportedOperationError)

# Fraction of the distance to the tanh/cosh^2 pole at omega*imag = pi/2 at
# which complex continuation is refused.
POLE_SAFETY_FRACTION = 0.95


@dataclass(frozen=True)
class PulseSpec:
    """One pulse shape plus the charge and mass of the driven particle.

    shape: "none", "sauter" (A0/cosh^2), "harmonic" (A0*sin), or "sudden"
    (distributional kick producing a step displacement).
    """

    shape: str
    q: float                 # charge, multiples of e
    m: float                 # mass (rest energy, keV)
    a0: float = 0.0          # e*A0 in keV (signed)
    omega: float = 0.0
    t_peak: float = 0.0
    phase: float = 0.0       # harmonic only
    step_chi: float = 0.0    # sudden only: displacement jump
    t0: float = 0.0          # sudden only: step time
    a_offset: float = 0.0    # constant gauge offset e*A_c in keV

    def __post_init__(self):
        if self.shape not in ("none", "sauter", "harmonic", "sudden"):
            raise ConfigurationError(f"unknown pulse shape {self.shape!r}")
        if self.shape in ("sauter", "harmonic") and self.omega <= 0:
            raise ConfigurationError("analytic pulses require omega > 0")
        if self.m <= 0:
            raise ConfigurationError("pulse mass must be > 0")

    @property
    def analytic(self) -> bool:
        return self.shape in ("sauter", "harmonic")

    @property
    def anchor(self) -> float:
        """Reference time where the gauge-offset drift of chi vanishes."""
        if self.shape == "sudden":
            return self.t0
        return self.t_peak

    def with_offset(self, a_offset: float) -> "PulseSpec":
        return replace(self, a_offset=a_offset)

    def flipped(self) -> "PulseSpec":
        """Same pulse with the field direction reversed."""
        return replace(self, a0=-self.a0, step_chi=-self.step_chi)


def none_pulse(q: float, m: float) -> PulseSpec:
    return PulseSpec("none", q=q, m=m)


def sauter(a0: float, omega: float, q: float, m: float,
           t_peak: float = 0.0) -> PulseSpec:
    return PulseSpec("sauter", q=q, m=m, a0=a0, omega=omega, t_peak=t_peak)


def harmonic(a0: float, omega: float, q: float, m: float,
             phase: float = 0.0) -> PulseSpec:
    return PulseSpec("harmonic", q=q, m=m, a0=a0, omega=omega, phase=phase)


def sudden(step_chi: float, t0: float, q: float, m: float) -> PulseSpec:
    return PulseSpec("sudden", q=q, m=m, step_chi=step_chi, t0=t0)


def sauter_from_peak_field(field_internal: float, omega: float, q: float,
                           m: float, t_peak: float = 0.0,
                           direction: float = 1.0) -> PulseSpec:
    """Sauter pulse from a peak field strength (internal keV^2 units).

    The adopted convention is peak field = A0*omega.  ``direction=+1``
    gives a net displacement pushing a positive charge toward +x
    (delta_chi > 0); -1 reverses the pulse.
    """
    if field_internal < 0:
        raise ConfigurationError("peak field magnitude must be >= 0")
    a0 = -direction * field_internal / omega
    return sauter(a0, omega, q, m, t_peak=t_peak)


def vector_potential(p: PulseSpec, t):
    """e*A(t) in keV; scalar or array t."""
    if p.shape == "sudden":
        raise UnsupportedOperationError(
            "sudden pulse has a distributional A(t); evaluate quiver instead")
    t = np.asarray(t, dtype=float)
    if p.shape == "none":
        a = np.full_like(t, p.a_offset)
    elif p.shape == "sauter":
        a = p.a0 / np.cosh(p.omega * (t - p.t_peak)) ** 2 + p.a_offset
    else:
        a = p.a0 * np.sin(p.omega * t + p.phase) + p.a_offset
    return a if a.ndim else float(a)


def quiver(p: PulseSpec, t):
    """Quiver displacement chi(t) with chi(-inf) = 0 for pulsed shapes.

    The harmonic shape never settles, so its chi uses the zero-time-average
    convention instead.  A gauge offset adds the drift
    -(q*a_offset/m)*(t - anchor).
    """
    t = np.asarray(t, dtype=float)
    drift = -(p.q * p.a_offset / p.m) * (t - p.anchor)
    if p.shape == "none":
        chi = drift
    elif p.shape == "sauter":
        chi = -(p.q * p.a0 / (p.m * p.omega)) * (
            np.tanh(p.omega * (t - p.t_peak)) + 1.0) + drift
    elif p.shape == "harmonic":
        chi = (p.q * p.a0 / (p.m * p.omega)) * np.cos(p.omega * t + p.phase) \
            + drift
    else:
        chi = p.step_chi * (t > p.t0).astype(float) + drift
    return chi if chi.ndim else float(chi)


def quiver_velocity(p: PulseSpec, t):
    """chi'(t) = -q*A(t)/m for shapes with a pointwise A."""
    return -(p.q / p.m) * np.asarray(vector_potential(p, t))


def delta_chi(p: PulseSpec) -> float:
    """Net pulse displacement chi(+inf) - chi(-inf), gauge offset excluded."""
    if p.shape == "sauter":
        return -2.0 * p.q * p.a0 / (p.m * p.omega)
    if p.shape == "sudden":
        return p.step_chi
    return 0.0


def _check_pole(p: PulseSpec, imag_time: float):
    if p.shape == "sauter":
        limit = POLE_SAFETY_FRACTION * (math.pi / 2.0)
        if p.omega * imag_time >= limit:
            raise SingularityError(
                f"omega*T = {p.omega * imag_time:.4g} too close to the "
                f"cosh^2 pole at pi/2; threshold is {limit:.4g}")


def quiver_complex(p: PulseSpec, t, imag_time: float):
    """Analytic continuation chi(t + i*T) for Sauter and harmonic pulses.

    ``t`` may be a scalar or an array of real times; ``imag_time`` is a
    single non-negative offset T.
    """
    if not p.analytic:
        raise UnsupportedOperationError(
            f"complex-time quiver undefined for shape {p.shape!r}")
    if imag_time < 0:
        raise ConfigurationError("imaginary time must be >= 0")
    _check_pole(p, imag_time)
    z = np.asarray(t, dtype=float) + 1j * imag_time
    drift = -(p.q * p.a_offset / p.m) * (z - p.anchor)
    if p.shape == "sauter":
        chi = -(p.q * p.a0 / (p.m * p.omega)) * (
            np.tanh(p.omega * (z - p.t_peak)) + 1.0) + drift
    else:
        chi = (p.q * p.a0 / (p.m * p.omega)) * np.cos(p.omega * z + p.phase) \
            + drift
    return chi if chi.ndim else complex(chi)


def vector_potential_complex(p: PulseSpec, t, imag_time: float):
    """e*A(t + i*T) for analytic shapes (same pole constraint as the quiver)."""
    if not p.analytic:
        raise UnsupportedOperationError(
            f"complex-time A undefined for shape {p.shape!r}")
    _check_pole(p, imag_time)
    z = np.asarray(t, dtype=float) + 1j * imag_time
    if p.shape == "sauter":
        a = p.a0 / np.cosh(p.omega * (z - p.t_peak)) ** 2 + p.a_offset
    else:
        a = p.a0 * np.sin(p.omega * z + p.phase) + p.a_offset
    return a if a.ndim else complex(a)


def peak_field(p: PulseSpec) -> float:
    """Peak field strength |A0|*omega (internal keV^2), the adopted convention."""
    if not p.analytic:
        raise UnsupportedOperationError(
            f"peak field undefined for shape {p.shape!r}")
    return abs(p.a0) * p.omega
