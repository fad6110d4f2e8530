import math

import numpy as np
import pytest

from pulsetunnel import units
from pulsetunnel.errors import ConfigurationError, DimensionError
from pulsetunnel.units import Quantity, from_internal, parse_quantity, to_internal


def test_fm_conversion_matches_hbar_c():
    # 1 fm in keV^-1 from hbar*c = 197327 keV*fm
    assert to_internal(Quantity(1.0, "length")) == pytest.approx(5.0677e-6, rel=1e-4)


def test_as_conversion_matches_hbar():
    assert to_internal(Quantity(1.0, "time")) == pytest.approx(1.5193, rel=1e-4)


def test_zero_converts_to_zero_for_every_dimension():
    for dim in units.DIMENSION_POWER:
        assert to_internal(Quantity(0.0, dim)) == 0.0


@pytest.mark.parametrize("dim", sorted(units.DIMENSION_POWER))
def test_round_trip_identity(dim):
    for value in (1.0, 3.7e-9, 4.2e12):
        back = from_internal(to_internal(Quantity(value, dim)), dim)
        assert back.value == pytest.approx(value, rel=1e-12)
        assert back.dimension == dim


def test_force_from_field_at_1e16_vm():
    f = units.force_from_field(Quantity(1e16, "field-strength"), 1.0)
    assert f.dimension == "force"
    assert f.value == pytest.approx(0.01, rel=1e-12)  # keV/fm


def test_force_from_field_effective_charge():
    f = units.force_from_field(Quantity(1e16, "field-strength"), 0.2)
    assert f.value == pytest.approx(0.002, rel=1e-12)


def test_force_from_field_zero_field():
    assert units.force_from_field(Quantity(0.0, "field-strength"), 2.0).value == 0.0


def test_force_from_field_sign_preserved_and_nan_rejected():
    f = units.force_from_field(Quantity(1e16, "field-strength"), -1.0)
    assert f.value == pytest.approx(-0.01, rel=1e-12)
    with pytest.raises(ConfigurationError):
        units.force_from_field(Quantity(float("nan"), "field-strength"), 1.0)


def test_dimension_mismatch_rejected():
    with pytest.raises(DimensionError):
        Quantity(1.0, "length") + Quantity(1.0, "time")
    with pytest.raises(DimensionError):
        Quantity(1.0, "nonsense")


def test_multiplicative_consistency():
    # to_internal(a*b) == to_internal(a)*to_internal(b)
    rng = np.random.default_rng(7)
    dims = ["energy", "length", "time", "mass", "dimensionless"]
    for _ in range(50):
        da, db = rng.choice(dims, size=2)
        a = Quantity(float(rng.uniform(0.1, 10)), da)
        b = Quantity(float(rng.uniform(0.1, 10)), db)
        lhs = to_internal(a * b)
        rhs = to_internal(a) * to_internal(b)
        assert lhs == pytest.approx(rhs, rel=1e-12)


def test_textbook_cross_conversions():
    # energy*length keV*fm -> dimensionless in hbar*c units
    e = to_internal(Quantity(197327.0, "energy"))
    x = to_internal(Quantity(1.0, "length"))
    assert e * x == pytest.approx(1.0, rel=1e-10)
    # energy*time keV*as -> action
    t = to_internal(Quantity(0.658212, "time"))
    assert t * to_internal(Quantity(1.0, "energy")) == pytest.approx(1.0, rel=1e-10)


def test_parse_quantity_suffixes():
    q = parse_quantity("720 fm")
    assert q.dimension == "length" and q.value == 720.0
    q = parse_quantity("1.5 MeV")
    assert q.dimension == "energy" and q.value == 1500.0
    q = parse_quantity("2 fs")
    assert q.dimension == "time" and q.value == 2000.0
    q = parse_quantity("1e16 V/m")
    assert q.dimension == "field-strength" and q.value == 1e16
    assert parse_quantity(3.5).dimension == "dimensionless"
    with pytest.raises(ConfigurationError):
        parse_quantity("3 furlongs")


def test_coulomb_coupling_is_alpha():
    c = units.coulomb_coupling(1.0)
    assert c == pytest.approx(1.0 / 137.036, rel=1e-12)
    # in mixed units: alpha*hbar*c = 1439.96 keV*fm
    assert c * units.HBARC_KEV_FM == pytest.approx(1439.96, rel=1e-4)


def test_dt_reduced_mass_and_q_eff():
    m1, m2 = units.MASS_KEV["D"], units.MASS_KEV["T"]
    mu = m1 * m2 / (m1 + m2)
    assert mu == pytest.approx(1.1246e6, rel=1e-3)
    q_eff = (1.0 * m2 - 1.0 * m1) / (m1 + m2)
    assert q_eff == pytest.approx(0.199, abs=0.002)
