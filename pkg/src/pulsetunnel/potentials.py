"""Static barrier shapes and their tunneling quantities.

Supported barriers: rectangular box, triangular ramp (rising or falling),
and a cut-off Coulomb tail with a square nuclear well.  For each shape the
module provides the classical turning points, the imaginary-time action

    S(E) = integral sqrt(2m[V(x)-E]) dx   between the turning points,

whose doubled value is the tunneling exponent, and the traversal time
T(E) = -dS/dE = integral sqrt(m/(2[V(x)-E])) dx that separates adiabatic
from impulse driving.  Closed forms are used for every variant; an
adaptive-quadrature path with turning-point regularization is kept for
cross-checks and as the fallback for perturbed shapes.

All inputs are in internal units (hbar = c = 1, energies in keV).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .errors import ConfigurationError, NoTunnelingError, NumericalError


@dataclass(frozen=True)
class Box:
    """V(x) = V0 on [0, L], zero outside."""

    V0: float
    L: float

    def __post_init__(self):
        if self.V0 <= 0 or self.L <= 0:
            raise ConfigurationError("box requires V0 > 0 and L > 0")


@dataclass(frozen=True)
class Triangle:
    """V(x) = V0*x/L (rising) or V0*(1-x/L) (falling) on [0, L]."""

    V0: float
    L: float
    orientation: str = "rising"

    def __post_init__(self):
        if self.V0 <= 0 or self.L <= 0:
            raise ConfigurationError("triangle requires V0 > 0 and L > 0")
        if self.orientation not in ("rising", "falling"):
            raise ConfigurationError("orientation must be 'rising' or 'falling'")


@dataclass(frozen=True)
class CoulombCutoff:
    """coupling/x for x > r_nuc, constant -well_depth inside the nucleus.

    ``coupling`` is q1*q2/(4*pi*eps0); dimensionless in hbar=c=1 units
    (Z1*Z2*alpha).  The well depth only affects the sub-barrier phase of
    scattering states, not the barrier quantities computed here.
    """

    coupling: float
    r_nuc: float = 4.0 / 197327.0  # 4 fm
    well_depth: float = 30.0e3     # keV

    def __post_init__(self):
        if self.coupling <= 0 or self.r_nuc <= 0:
            raise ConfigurationError("coulomb requires coupling > 0 and r_nuc > 0")
        if self.well_depth < 0:
            raise ConfigurationError("well_depth must be >= 0")


@dataclass(frozen=True)
class CoulombWithWell(CoulombCutoff):
    """Cut-off Coulomb whose nuclear well is meant to hold the initial state.

    Same shape as :class:`CoulombCutoff`; the distinct type marks scenarios
    that start from a (quasi)bound state in the well rather than from an
    incident packet.  Whether the well actually admits such a state is
    checked by the relaxation solver.
    """


@dataclass(frozen=True)
class TurningPoints:
    x_in: float
    x_out: float


def barrier_top(p) -> float:
    """Maximum barrier height seen by a tunneling particle."""
    if isinstance(p, (Box, Triangle)):
        return p.V0
    if isinstance(p, CoulombCutoff):
        return p.coupling / p.r_nuc
    raise ConfigurationError(f"unknown potential {p!r}")


def evaluate(p, x):
    """Potential value at x; accepts scalars or numpy arrays.

    Coulomb variants are defined on the half line and reject x <= 0.
    """
    if isinstance(p, Box):
        x = np.asarray(x, dtype=float)
        v = np.where((x >= 0.0) & (x <= p.L), p.V0, 0.0)
        return v if v.ndim else float(v)
    if isinstance(p, Triangle):
        x = np.asarray(x, dtype=float)
        ramp = x / p.L if p.orientation == "rising" else 1.0 - x / p.L
        v = np.where((x >= 0.0) & (x <= p.L), p.V0 * ramp, 0.0)
        return v if v.ndim else float(v)
    if isinstance(p, CoulombCutoff):
        x = np.asarray(x, dtype=float)
        if np.any(x <= 0.0):
            raise ConfigurationError("Coulomb potential requires x > 0")
        v = np.where(x > p.r_nuc, p.coupling / x, -p.well_depth)
        return v if v.ndim else float(v)
    raise ConfigurationError(f"unknown potential {p!r}")


def turning_points(p, E: float) -> TurningPoints:
    """The two classical crossing points V(x) = E bounding the forbidden region."""
    top = barrier_top(p)
    if not 0.0 < E < top:
        raise NoTunnelingError(
            f"E = {E} outside the tunneling window (0, {top})")
    if isinstance(p, Box):
        return TurningPoints(0.0, p.L)
    if isinstance(p, Triangle):
        if p.orientation == "rising":
            return TurningPoints(E * p.L / p.V0, p.L)
        return TurningPoints(0.0, p.L * (1.0 - E / p.V0))
    # Coulomb: inner edge is the nuclear radius, outer point is coupling/E.
    r_e = p.coupling / E
    return TurningPoints(p.r_nuc, r_e)


def wkb_action(p, E: float, m: float, method: str = "closed") -> float:
    """Imaginary-time action S(E) between the turning points."""
    tp = turning_points(p, E)
    if method == "quadrature":
        return _barrier_integral(p, E, m, tp, kind="action")
    if isinstance(p, Box):
        return p.L * math.sqrt(2.0 * m * (p.V0 - E))
    if isinstance(p, Triangle):
        return (2.0 / 3.0) * p.L * math.sqrt(2.0 * m) * (p.V0 - E) ** 1.5 / p.V0
    # Cut-off Coulomb, closed form with u = r_nuc/r_E:
    #   S = sqrt(2mE) * r_E * [arccos(sqrt(u)) - sqrt(u(1-u))]
    u = p.r_nuc * E / p.coupling
    r_e = p.coupling / E
    return math.sqrt(2.0 * m * E) * r_e * (
        math.acos(math.sqrt(u)) - math.sqrt(u * (1.0 - u)))


def traversal_time(p, E: float, m: float, method: str = "closed") -> float:
    """Buettiker-Landauer traversal time T(E) = -dS/dE."""
    tp = turning_points(p, E)
    if method == "quadrature":
        return _barrier_integral(p, E, m, tp, kind="time")
    if isinstance(p, Box):
        return p.L * math.sqrt(m / (2.0 * (p.V0 - E)))
    if isinstance(p, Triangle):
        return p.L * math.sqrt(2.0 * m * (p.V0 - E)) / p.V0
    # Cut-off Coulomb: T = sqrt(m/2E) * r_E * [arccos(sqrt(u)) + sqrt(u(1-u))]
    u = p.r_nuc * E / p.coupling
    r_e = p.coupling / E
    return math.sqrt(m / (2.0 * E)) * r_e * (
        math.acos(math.sqrt(u)) + math.sqrt(u * (1.0 - u)))


def _barrier_integral(p, E, m, tp, kind):
    """Adaptive quadrature of the action or time integrand.

    The inverse-square-root behaviour at the turning points is removed by
    substituting u^2 = x - x_in (left half) and u^2 = x_out - x (right half),
    after which the integrands are bounded.
    """
    if kind == "action":
        def f(x):
            return math.sqrt(max(2.0 * m * (evaluate(p, x) - E), 0.0))
    else:
        def f(x):
            dv = evaluate(p, x) - E
            if dv <= 0.0:
                return 0.0
            return math.sqrt(m / (2.0 * dv))

    a, b = tp.x_in, tp.x_out
    mid = 0.5 * (a + b)

    def left(u):
        return 2.0 * u * f(a + u * u)

    def right(u):
        return 2.0 * u * f(b - u * u)

    half = math.sqrt(mid - a)
    val1, err1 = integrate.quad(left, 0.0, half, limit=200, epsabs=0.0,
                                epsrel=1e-11)
    half = math.sqrt(b - mid)
    val2, err2 = integrate.quad(right, 0.0, half, limit=200, epsabs=0.0,
                                epsrel=1e-11)
    total = val1 + val2
    if total != 0.0 and (err1 + err2) > 1e-7 * abs(total):
        raise NumericalError(
            f"barrier quadrature did not converge: value={total}, "
            f"error={err1 + err2}, potential={p}, E={E}")
    return total
