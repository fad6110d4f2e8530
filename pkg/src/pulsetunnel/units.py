"""Natural-unit system and conversions.

Internally everything is expressed in powers of keV with hbar = c = 1:

    energy, mass          keV        (masses stored as rest energies)
    length, time          keV^-1
    field strength        keV^2      (stored as e*E, elementary charge folded in)
    vector potential      keV        (stored as e*A; multiply by charge in
                                      units of e to get a momentum)
    charge                pure number (multiple of e)
    action                pure number

All user-facing I/O happens in external units (fm, as, V/m, keV, MeV, ...);
internal values never appear in output files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConfigurationError, DimensionError

# Physical constants pinning the conversions (CODATA rounded to 6 figures).
HBARC_KEV_FM = 197327.0        # hbar*c in keV*fm
HBAR_KEV_AS = 0.658212         # hbar in keV*as
FINE_STRUCTURE_INVERSE = 137.036
ALPHA = 1.0 / FINE_STRUCTURE_INVERSE

# e * (1 V/m) = 1 eV/m = 1e-18 keV/fm.
E_TIMES_VM_KEV_PER_FM = 1.0e-18

# Nuclide rest energies in keV (fully stripped nuclei).
MASS_KEV = {
    "p": 938.272e3,
    "D": 1875.61e3,
    "T": 2808.92e3,
    "B11": 10252.5e3,
}

# Each supported dimension reduces to a power of keV once hbar = c = 1.
DIMENSION_POWER = {
    "energy": 1,
    "mass": 1,
    "length": -1,
    "time": -1,
    "field-strength": 2,
    "force": 2,
    "vector-potential": 1,
    "momentum": 1,
    "charge": 0,
    "action": 0,
    "dimensionless": 0,
}

# unit suffix -> (dimension, factor converting one unit to the canonical
# external unit of that dimension).  Canonical externals: keV, fm, as, V/m.
_UNIT_TABLE = {
    "keV": ("energy", 1.0),
    "MeV": ("energy", 1.0e3),
    "eV": ("energy", 1.0e-3),
    "keV/c^2": ("mass", 1.0),
    "MeV/c^2": ("mass", 1.0e3),
    "fm": ("length", 1.0),
    "pm": ("length", 1.0e3),
    "nm": ("length", 1.0e6),
    "as": ("time", 1.0),
    "fs": ("time", 1.0e3),
    "V/m": ("field-strength", 1.0),
    "keV/fm": ("force", 1.0),
    "e": ("charge", 1.0),
    "hbar": ("action", 1.0),
    "dimensionless": ("dimensionless", 1.0),
    "": ("dimensionless", 1.0),
}

# canonical external unit -> internal value (in keV^power).
_CANONICAL_TO_INTERNAL = {
    "energy": 1.0,
    "mass": 1.0,                              # canonical mass input is keV
    "length": 1.0 / HBARC_KEV_FM,             # 1 fm in keV^-1
    "time": 1.0 / HBAR_KEV_AS,                # 1 as in keV^-1
    "field-strength": E_TIMES_VM_KEV_PER_FM * HBARC_KEV_FM,  # e*(1 V/m) in keV^2
    "force": HBARC_KEV_FM,                    # 1 keV/fm in keV^2
    "vector-potential": 1.0,                  # e*A quoted directly in keV
    "momentum": 1.0,
    "charge": 1.0,
    "action": 1.0,
    "dimensionless": 1.0,
}

@dataclass(frozen=True)
class Quantity:
    """A value tagged with one of the supported dimensions (external units)."""

    value: float
    dimension: str

    def __post_init__(self):
        if self.dimension not in DIMENSION_POWER:
            raise DimensionError(f"unsupported dimension {self.dimension!r}")
        if isinstance(self.value, float) and math.isnan(self.value):
            raise ConfigurationError("quantity value is NaN")

    def _require_same(self, other: "Quantity"):
        if not isinstance(other, Quantity):
            raise DimensionError("can only combine Quantity with Quantity")
        if other.dimension != self.dimension:
            raise DimensionError(
                f"dimension mismatch: {self.dimension} vs {other.dimension}")

    def __add__(self, other):
        self._require_same(other)
        return Quantity(self.value + other.value, self.dimension)

    def __sub__(self, other):
        self._require_same(other)
        return Quantity(self.value - other.value, self.dimension)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Quantity(self.value * other, self.dimension)
        power = DIMENSION_POWER[self.dimension] + DIMENSION_POWER[other.dimension]
        return Quantity(to_internal(self) * to_internal(other),
                        _dimension_for_power(power))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Quantity(self.value / other, self.dimension)
        power = DIMENSION_POWER[self.dimension] - DIMENSION_POWER[other.dimension]
        return Quantity(to_internal(self) / to_internal(other),
                        _dimension_for_power(power))


def _dimension_for_power(power: int) -> str:
    """Label for quantities produced by multiplication.

    Products are calibrated to internal units (conversion factor one), so
    mixed-unit products stay consistent: keV^0 collapses to dimensionless,
    anything else is labelled by its power of keV.
    """
    if power == 0:
        return "dimensionless"
    label = f"energy^{power}"
    DIMENSION_POWER.setdefault(label, power)
    _CANONICAL_TO_INTERNAL.setdefault(label, 1.0)
    return label


def to_internal(q: Quantity) -> float:
    """Convert a Quantity in canonical external units to internal (keV^n) units.

    Lengths are read as fm, times as as, energies/masses as keV, fields as V/m.
    """
    try:
        factor = _CANONICAL_TO_INTERNAL[q.dimension]
    except KeyError:
        raise DimensionError(f"unsupported dimension {q.dimension!r}") from None
    if math.isnan(q.value):
        raise ConfigurationError("cannot convert NaN")
    return q.value * factor


def from_internal(value: float, dimension: str) -> Quantity:
    """Inverse of :func:`to_internal`; exact round trip by construction."""
    try:
        factor = _CANONICAL_TO_INTERNAL[dimension]
    except KeyError:
        raise DimensionError(f"unsupported dimension {dimension!r}") from None
    return Quantity(value / factor, dimension)


def parse_quantity(text) -> Quantity:
    """Parse a config value like ``"720 fm"`` or ``"1e16 V/m"`` or a bare number.

    Bare numbers are dimensionless.  The unit suffix selects the dimension and
    is rescaled to the canonical external unit (MeV -> keV, fs -> as, ...).
    """
    if isinstance(text, (int, float)):
        return Quantity(float(text), "dimensionless")
    parts = str(text).strip().split(None, 1)
    try:
        value = float(parts[0])
    except ValueError:
        raise ConfigurationError(f"cannot parse quantity {text!r}") from None
    suffix = parts[1].strip() if len(parts) > 1 else ""
    if suffix not in _UNIT_TABLE:
        raise ConfigurationError(
            f"unknown unit {suffix!r}; supported: {sorted(k for k in _UNIT_TABLE if k)}")
    dimension, scale = _UNIT_TABLE[suffix]
    return Quantity(value * scale, dimension)


def internal_from_text(text, expect: str | None = None) -> float:
    """Parse and convert in one step, optionally enforcing the dimension."""
    q = parse_quantity(text)
    if expect is not None and q.dimension != expect:
        if not (expect == "mass" and q.dimension == "energy"):
            raise DimensionError(
                f"expected a {expect}, got {q.dimension} from {text!r}")
    return to_internal(q)


def force_from_field(field: Quantity, charge: float) -> Quantity:
    """q*E for a field in V/m and a charge in multiples of e, as keV/fm.

    Negative charge flips the sign; a NaN or negative field magnitude is
    rejected.
    """
    if field.dimension != "field-strength":
        raise DimensionError(f"expected field-strength, got {field.dimension}")
    if math.isnan(field.value) or math.isnan(charge):
        raise ConfigurationError("NaN input to force_from_field")
    if field.value < 0:
        raise ConfigurationError("field magnitude must be >= 0")
    kev_per_fm = charge * field.value * E_TIMES_VM_KEV_PER_FM
    return Quantity(kev_per_fm, "force")


# Convenience conversion helpers used throughout the package (plain floats).

def fm_to_internal(x_fm: float) -> float:
    return x_fm / HBARC_KEV_FM


def internal_to_fm(x: float) -> float:
    return x * HBARC_KEV_FM


def as_to_internal(t_as: float) -> float:
    return t_as / HBAR_KEV_AS


def internal_to_as(t: float) -> float:
    return t * HBAR_KEV_AS


def field_vm_to_internal(field_vm: float) -> float:
    """e*E for a field in V/m, in keV^2 (divide by a length for keV/length)."""
    return field_vm * E_TIMES_VM_KEV_PER_FM * HBARC_KEV_FM


def coulomb_coupling(z1z2: float) -> float:
    """q1*q2/(4*pi*eps0) for charge numbers Z1*Z2, dimensionless (= Z1*Z2*alpha)."""
    return z1z2 * ALPHA
