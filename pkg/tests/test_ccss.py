"""Capture, transfer and storage cost model."""

import pytest

from ewhnexus.ccss import CcssPlan, ccss_capital, ccss_operational
from ewhnexus.quantities import (
    DomainError, EconParams, PlantSpec, Quantity, UnitError,
    constant_profile, emissions_at_capacity,
)

BIOMASS = PlantSpec("biomass", Quantity(500, "MW"), Quantity(230, "g/kWh"))


def econ(**over):
    base = dict(elec_price=0.25, r_cts=15.0, r_ccs=45.0, c_cts=100.0, c_ccs=300.0,
                c_wind=1030.0, c_des=2e5, c_tw=160.0,
                wind_capacity_factor=0.423, eta_pump=0.9)
    base.update(over)
    return EconParams(**base)


FULL_LOAD = constant_profile(emissions_at_capacity(BIOMASS), 24)


class TestPlan:
    def test_beta_bounds(self):
        CcssPlan(0.0)
        CcssPlan(1.0)
        for bad in (-0.1, 1.1):
            with pytest.raises(DomainError):
                CcssPlan(bad)


class TestCapital:
    def test_hand_computed_storage_case(self):
        # (100 + 300) $/ton-day on 2760 ton/day -> $1.104 M
        cap = ccss_capital(CcssPlan(0.0), BIOMASS, econ())
        assert cap.value_in("$") == pytest.approx(1.104e6, rel=1e-12)

    def test_full_reuse_drops_the_transfer_term(self):
        cap = ccss_capital(CcssPlan(1.0), BIOMASS, econ())
        assert cap.value_in("$") == pytest.approx(300.0 * 2760.0, rel=1e-12)

    def test_half_reuse_halves_only_the_transfer_term(self):
        c0 = ccss_capital(CcssPlan(0.0), BIOMASS, econ()).value_in("$")
        chalf = ccss_capital(CcssPlan(0.5), BIOMASS, econ()).value_in("$")
        c1 = ccss_capital(CcssPlan(1.0), BIOMASS, econ()).value_in("$")
        assert c0 - chalf == pytest.approx(0.5 * 100.0 * 2760.0, rel=1e-12)
        assert c0 - c1 == pytest.approx(100.0 * 2760.0, rel=1e-12)

    def test_scales_linearly_with_plant_size(self):
        small = PlantSpec("s", Quantity(250, "MW"), Quantity(230, "g/kWh"))
        assert ccss_capital(CcssPlan(0.3), BIOMASS, econ()).value_in("$") == pytest.approx(
            2 * ccss_capital(CcssPlan(0.3), small, econ()).value_in("$"), rel=1e-12)

    def test_unconfigured_c_ccs_is_an_error(self):
        with pytest.raises(DomainError, match="c_ccs"):
            ccss_capital(CcssPlan(0.0), BIOMASS, econ(c_ccs=None))


class TestOperational:
    def test_store_all_reference_day(self):
        cost = ccss_operational(CcssPlan(0.0), FULL_LOAD, econ())
        assert cost.value_in("$/day") == 165600.0  # exact: 2760 ton x (15+45)

    def test_reuse_all_drops_transfer(self):
        cost = ccss_operational(CcssPlan(1.0), FULL_LOAD, econ())
        assert cost.value_in("$/day") == 124200.0  # 2760 x 45

    def test_zero_series(self):
        zero = constant_profile(Quantity(0, "ton/h"), 24)
        assert ccss_operational(CcssPlan(0.0), zero, econ()).value_in("$/day") == 0.0

    def test_non_increasing_in_beta(self):
        costs = [ccss_operational(CcssPlan(b), FULL_LOAD, econ()).value_in("$/day")
                 for b in (0.0, 0.25, 0.5, 0.75, 1.0)]
        assert costs == sorted(costs, reverse=True)

    def test_beta_endpoints_differ_by_exactly_the_transfer_term(self):
        lo = ccss_operational(CcssPlan(0.0), FULL_LOAD, econ()).value_in("$/day")
        hi = ccss_operational(CcssPlan(1.0), FULL_LOAD, econ()).value_in("$/day")
        assert lo - hi == pytest.approx(2760.0 * 15.0, rel=1e-12)

    def test_wrong_unit_series_rejected(self):
        flow = constant_profile(Quantity(10, "m3/h"), 24)
        with pytest.raises(UnitError):
            ccss_operational(CcssPlan(0.0), flow, econ())

    def test_wrong_length_series_rejected(self):
        short = constant_profile(Quantity(115, "ton/h"), 12)
        with pytest.raises(DomainError):
            ccss_operational(CcssPlan(0.0), short, econ())
