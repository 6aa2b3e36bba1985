"""Techno-economic engine for retrofitting conventional power plants with
carbon capture plus water, wind-power and hydrogen sections.

The library answers four decision questions: the cheapest water supply, the
better fate for captured carbon (storage vs. chemical reuse), the best-value
chemical product, and the carbon-penalty rate that makes each option rational.
"""

from .quantities import (
    CostLedger, DomainError, EconParams, LedgerItem, PlantSpec, Quantity,
    TimeSeries, UnitError, constant_profile, emissions_at_capacity,
)
from .ccss import CcssPlan, ccss_capital, ccss_operational
from .water import (
    Desalination, NetworkTransfer, SolarSeawater, WaterSupplyPlan,
    desal_power, head_loss, pump_power, water_capital, water_operational,
)
from .conversion import (
    BUILTIN_PRODUCTS, ETHANOL, METHANE, METHANOL, HydrogenPlan, ProductSpec,
    Reaction, builtin_product, chemical_revenue, hydrogen_capital, nexus_rates,
    power_capital, stoichiometry,
)
from .economics import (
    AnnualizationPolicy, ScenarioConfig, ScenarioResult, carbon_penalty,
    daily_capital_charge, increased_price, total_daily_cost,
)
from .analysis import (
    BreakevenQuery, NoCrossingError, ReuseAll, StoreAll, SweepGrid,
    breakeven_distance, penalty_threshold, scenario_sweep, transfer_cost_curve,
)
from .config import ConfigError, LoadedConfig, dump_config, load_config
from .presets import econ_for_cell, paper_2024, resolver

__all__ = [
    "AnnualizationPolicy", "BreakevenQuery", "BUILTIN_PRODUCTS", "CcssPlan",
    "ConfigError", "CostLedger", "Desalination", "DomainError", "EconParams",
    "ETHANOL", "HydrogenPlan", "LedgerItem", "LoadedConfig", "METHANE",
    "METHANOL", "NetworkTransfer", "NoCrossingError", "PlantSpec",
    "ProductSpec", "Quantity", "Reaction", "ReuseAll", "ScenarioConfig",
    "ScenarioResult", "SolarSeawater", "StoreAll", "SweepGrid", "TimeSeries",
    "UnitError", "WaterSupplyPlan", "breakeven_distance", "builtin_product",
    "carbon_penalty", "ccss_capital", "ccss_operational", "chemical_revenue",
    "constant_profile", "daily_capital_charge", "desal_power", "dump_config",
    "econ_for_cell", "emissions_at_capacity", "head_loss", "hydrogen_capital",
    "increased_price", "load_config", "nexus_rates", "paper_2024",
    "penalty_threshold", "power_capital", "pump_power", "resolver",
    "scenario_sweep", "stoichiometry", "total_daily_cost",
    "transfer_cost_curve", "water_capital", "water_operational",
]

__version__ = "0.1.0"
