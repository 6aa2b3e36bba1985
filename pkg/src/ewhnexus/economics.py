"""Total cost assembly, capital annualization, and the derived decision metrics.

The daily total is the annualized capital charge plus the operational flows
minus product revenue.  Revenues are negative costs throughout.  Two derived
metrics turn a daily cost into decision numbers: the electricity price uplift
that would recover it, and the carbon penalty rate at which paying for
emissions costs the same as running the retrofit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import ccss, conversion, water
from .quantities import (
    CAPITAL, OPERATIONAL, REVENUE,
    CostLedger, DomainError, EconParams, LedgerItem, PlantSpec, Quantity,
    TimeSeries, constant_profile, emissions_at_capacity,
)

HOURS_PER_DAY = 24
DAYS_PER_YEAR = 365


@dataclass(frozen=True)
class AnnualizationPolicy:
    """How capital stocks become a daily charge."""

    horizon_years: int
    interest_rate: float
    include_hydrogen_capital: bool = False

    def __post_init__(self):
        if self.horizon_years < 1 or int(self.horizon_years) != self.horizon_years:
            raise DomainError("horizon_years must be an integer >= 1")
        if self.interest_rate < 0:
            raise DomainError("interest_rate must be >= 0")

    @classmethod
    def from_econ(cls, econ: EconParams,
                  include_hydrogen_capital: bool = False) -> "AnnualizationPolicy":
        return cls(econ.horizon_years, econ.interest_rate, include_hydrogen_capital)


def daily_capital_charge(capital: Quantity, policy: AnnualizationPolicy) -> Quantity:
    """Daily charge recovering a capital stock over the policy horizon [$ / day].

    capital * (1 + lambda)^(N-1) / (365 N); with N = 1 and lambda = 0 this is
    exactly capital / 365.
    """
    cap = capital.value_in("$")
    if cap < 0:
        raise DomainError("capital must be >= 0")
    n = int(policy.horizon_years)
    charge = cap * (1.0 + policy.interest_rate) ** (n - 1) / (DAYS_PER_YEAR * n)
    return Quantity(charge, "$/day")


@dataclass(frozen=True)
class ScenarioConfig:
    """One fully specified retrofit scenario.

    ``beta`` = 0 is pure storage: no water, power, hydrogen or revenue terms
    exist.  A positive ``beta`` needs a product; the water system and the
    electrolyzer fleet are sized to the reuse stream.
    """

    plant: PlantSpec
    econ: EconParams
    beta: float = 0.0
    product: conversion.ProductSpec | None = None
    water_mode: water.WaterMode = water.Desalination()
    policy: AnnualizationPolicy | None = None
    capture_profile: TimeSeries | None = None   # defaults to 24 h full load

    def __post_init__(self):
        if not 0.0 <= self.beta <= 1.0:
            raise DomainError(f"beta must lie in [0, 1], got {self.beta!r}")
        if self.beta > 0 and self.product is None:
            raise DomainError("a reuse scenario (beta > 0) needs a product")

    def resolved_policy(self) -> AnnualizationPolicy:
        return self.policy if self.policy is not None else AnnualizationPolicy.from_econ(self.econ)


@dataclass(frozen=True)
class ScenarioResult:
    """Itemized ledger plus the decision metrics derived from its total."""

    ledger: CostLedger
    daily_cost: Quantity       # [$ / day]
    increased_price: Quantity  # [$ / kWh]
    carbon_penalty: Quantity   # [$ / ton]


def increased_price(daily_cost: Quantity, plant: PlantSpec) -> Quantity:
    """Electricity price uplift recovering the daily cost [$ / kWh].

    Divides the daily cost by one hour of full generation, the relation the
    reference cost tables use; kept as-is rather than corrected, although a
    per-day energy basis would be 24x larger.
    """
    cap_kw = plant.capacity.value_in("kW")
    if cap_kw <= 0:
        raise DomainError("plant capacity must be positive")
    return Quantity(daily_cost.value_in("$/day") / cap_kw, "$/kWh")


def carbon_penalty(daily_cost: Quantity, plant: PlantSpec) -> Quantity:
    """Break-even emission penalty rate [$ / ton].

    The penalty on the full-load daily carbon mass that would cost exactly
    as much as the scenario; negative when the scenario is net revenue.
    """
    cbar_ton_day = emissions_at_capacity(plant).value_in("ton/h") * HOURS_PER_DAY
    if cbar_ton_day <= 0:
        raise DomainError("plant emits no carbon; the penalty threshold is undefined")
    return Quantity(daily_cost.value_in("$/day") / cbar_ton_day, "$/ton")


def _term(label: str, fn, *args, **kwargs):
    """Evaluate one cost term, naming it if its domain check fails."""
    try:
        return fn(*args, **kwargs)
    except DomainError as exc:
        raise DomainError(f"{label}: {exc}") from exc


def total_daily_cost(scenario: ScenarioConfig) -> ScenarioResult:
    """Assemble the full cost ledger and decision metrics of a scenario."""
    plant, econ, beta = scenario.plant, scenario.econ, scenario.beta
    policy = scenario.resolved_policy()

    captured = scenario.capture_profile
    if captured is None:
        captured = constant_profile(emissions_at_capacity(plant), HOURS_PER_DAY)

    plan = ccss.CcssPlan(beta)
    items: list[LedgerItem] = []

    cap_ccss = _term("ccss-capital", ccss.ccss_capital, plan, plant, econ)
    items.append(LedgerItem("capture and storage pipeline capital", "ccss-capital",
                            CAPITAL, cap_ccss.value_in("$"), "$"))
    op_ccss = _term("ccss-operational", ccss.ccss_operational, plan, captured, econ)
    items.append(LedgerItem("capture and transfer operations", "ccss-operational",
                            OPERATIONAL, op_ccss.value_in("$/day"), "$/day"))

    if beta > 0 and scenario.product is not None:
        product = scenario.product
        h2_rate, water_rate, _ = conversion.nexus_rates(plant, product, beta)
        h_plan = conversion.HydrogenPlan(h2_rate)

        cap_power = _term("power-capital", conversion.power_capital, h_plan.h_max, econ)
        items.append(LedgerItem("wind farm capital", "power-capital",
                                CAPITAL, cap_power.value_in("$"), "$"))

        if policy.include_hydrogen_capital:
            cap_h2 = _term("hydrogen-capital", conversion.hydrogen_capital,
                           plant, product, beta, econ)
            items.append(LedgerItem("electrolyzer capital", "hydrogen-capital",
                                    CAPITAL, cap_h2.value_in("$"), "$"))

        w_plan = water.WaterSupplyPlan(scenario.water_mode, water_rate)
        cap_water = _term("water-capital", water.water_capital, w_plan, econ)
        items.append(LedgerItem("water system capital", "water-capital",
                                CAPITAL, cap_water.value_in("$"), "$"))

        # L/kg times ton/h is m3/h; same arithmetic path as nexus_rates so a
        # full-load profile lands exactly on w_max
        flow = TimeSeries(
            tuple(product.water_demand * beta * c for c in captured.values_in("ton/h")),
            "m3/h")
        op_water = _term("water-operational", water.water_operational, w_plan, flow, econ)
        items.append(LedgerItem("water system operations", "water-operational",
                                OPERATIONAL, op_water.value_in("$/day"), "$/day"))

        revenue = _term("product-revenue", conversion.chemical_revenue,
                        product, captured, beta, econ)
        items.append(LedgerItem(f"{product.name} sales", "product-revenue",
                                REVENUE, revenue.value_in("$/day"), "$/day"))

    capital_total = math.fsum(i.amount for i in items if i.unit == "$")
    charge = daily_capital_charge(Quantity(capital_total, "$"), policy)
    items.append(LedgerItem("daily capital charge", "capital-charge",
                            CAPITAL, charge.value_in("$/day"), "$/day"))

    ledger = CostLedger(tuple(items))
    daily = Quantity(ledger.daily_total(), "$/day")
    return ScenarioResult(
        ledger=ledger,
        daily_cost=daily,
        increased_price=increased_price(daily, plant),
        carbon_penalty=carbon_penalty(daily, plant),
    )
