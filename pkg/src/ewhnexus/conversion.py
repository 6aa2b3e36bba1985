"""Hydrogen production, chemical synthesis stoichiometry, and product revenue.

Each product is defined by its hydrogenation reaction; every mass ratio is
derived from the stored atomic masses, so atom balance implies exact mass
balance.  The atomic mass table travels with the product: the shipped
definitions reproduce the reference hydrogen requirements (182 g H2 per kg
CO2 for methane, 137.4 g for methanol and ethanol) exactly, methane's from
integer atomic masses, the alcohols' from standard ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple

from .quantities import (
    DomainError, EconParams, PlantSpec, Quantity, TimeSeries, UnitError,
    emissions_at_capacity,
)


@dataclass(frozen=True)
class AtomicMasses:
    """Atomic masses [kg/mol] from which all molecular masses derive."""

    C: float
    H: float
    O: float


INTEGER_MASSES = AtomicMasses(C=0.012, H=0.001, O=0.016)
STANDARD_MASSES = AtomicMasses(C=0.012011, H=0.001008, O=0.015999)


@dataclass(frozen=True)
class Reaction:
    """Moles in a CO2 + b H2 -> c product + e H2O."""

    co2: int
    h2: int
    product: int
    h2o: int

    def __post_init__(self):
        for name, n in (("co2", self.co2), ("h2", self.h2),
                        ("product", self.product), ("h2o", self.h2o)):
            if not isinstance(n, int) or n < 0:
                raise DomainError(f"reaction coefficient {name} must be a non-negative int")
        if self.co2 < 1 or self.product < 1:
            raise DomainError("reaction must consume CO2 and yield a product")


class MassRatios(NamedTuple):
    xi_h: float          # kg H2 per kg CO2 reused
    xi_chi: float        # kg product per kg CO2 reused
    water_demand: float  # liters electrolysis feed water per kg CO2 reused


@dataclass(frozen=True)
class ProductSpec:
    """A synthesizable chemical product with its derived mass ratios."""

    name: str
    formula: Mapping[str, int]        # atoms per product molecule, e.g. {"C": 1, "H": 4}
    reaction: Reaction
    atomic_masses: AtomicMasses = STANDARD_MASSES

    def __post_init__(self):
        object.__setattr__(self, "formula",
                           {k: int(v) for k, v in self.formula.items() if v})
        unknown = set(self.formula) - {"C", "H", "O"}
        if unknown:
            raise DomainError(f"unsupported elements in formula: {sorted(unknown)}")
        self._check_atom_balance()

    def _check_atom_balance(self) -> None:
        r, f = self.reaction, self.formula
        balances = {
            "C": r.co2 - r.product * f.get("C", 0),
            "H": 2 * r.h2 - r.product * f.get("H", 0) - 2 * r.h2o,
            "O": 2 * r.co2 - r.product * f.get("O", 0) - r.h2o,
        }
        bad = {el: d for el, d in balances.items() if d != 0}
        if bad:
            raise DomainError(f"reaction for {self.name!r} does not balance: {bad}")

    @property
    def m_co2(self) -> float:
        am = self.atomic_masses
        return am.C + 2.0 * am.O

    @property
    def m_h2(self) -> float:
        return 2.0 * self.atomic_masses.H

    @property
    def m_h2o(self) -> float:
        am = self.atomic_masses
        return 2.0 * am.H + am.O

    @property
    def m_product(self) -> float:
        am = self.atomic_masses
        f = self.formula
        return f.get("C", 0) * am.C + f.get("H", 0) * am.H + f.get("O", 0) * am.O

    @property
    def xi_h(self) -> float:
        r = self.reaction
        return (r.h2 * self.m_h2) / (r.co2 * self.m_co2)

    @property
    def xi_chi(self) -> float:
        r = self.reaction
        return (r.product * self.m_product) / (r.co2 * self.m_co2)

    @property
    def water_demand(self) -> float:
        # one mole of feed water per mole of electrolytic H2; 1 kg == 1 L
        r = self.reaction
        return (r.h2 * self.m_h2o) / (r.co2 * self.m_co2)

    @property
    def water_byproduct(self) -> float:
        """Reaction water out, kg per kg CO2 (closes the mass balance)."""
        r = self.reaction
        return (r.h2o * self.m_h2o) / (r.co2 * self.m_co2)


METHANE = ProductSpec("methane", {"C": 1, "H": 4}, Reaction(1, 4, 1, 2), INTEGER_MASSES)
METHANOL = ProductSpec("methanol", {"C": 1, "H": 4, "O": 1}, Reaction(1, 3, 1, 1))
ETHANOL = ProductSpec("ethanol", {"C": 2, "H": 6, "O": 1}, Reaction(2, 6, 1, 3))

BUILTIN_PRODUCTS: dict[str, ProductSpec] = {
    p.name: p for p in (METHANE, METHANOL, ETHANOL)
}


def builtin_product(name: str) -> ProductSpec:
    try:
        return BUILTIN_PRODUCTS[name]
    except KeyError:
        raise DomainError(
            f"unknown product {name!r}; built-ins are {sorted(BUILTIN_PRODUCTS)}") from None


def stoichiometry(product: ProductSpec) -> MassRatios:
    """Derived mass ratios per kg of reused CO2."""
    return MassRatios(product.xi_h, product.xi_chi, product.water_demand)


@dataclass(frozen=True)
class HydrogenPlan:
    """Electrolyzer fleet sized to a maximum hydrogen output."""

    h_max: Quantity  # [ton/h]

    def __post_init__(self):
        if self.h_max.dim != (1, 0, -1, 0, 0, 0):
            raise UnitError(f"h_max must be a mass flow, got {self.h_max.unit!r}")
        if self.h_max.magnitude < 0:
            raise DomainError("h_max must be >= 0")


def nexus_rates(plant: PlantSpec, product: ProductSpec,
                beta: float) -> tuple[Quantity, Quantity, Quantity]:
    """Hydrogen, feed-water and product rates for a reuse fraction beta.

    Returns (H2 [ton/h], water [m3/h], product [ton/h]); each is
    beta * C_bar * the corresponding stoichiometric ratio.  The water rate
    covers electrolysis feed only.
    """
    if not 0.0 <= beta <= 1.0:
        raise DomainError(f"beta must lie in [0, 1], got {beta!r}")
    cbar_ton_h = emissions_at_capacity(plant).value_in("ton/h")
    h2 = product.xi_h * beta * cbar_ton_h
    water = product.water_demand * beta * cbar_ton_h  # L/kg * ton/h == m3/h
    chem = product.xi_chi * beta * cbar_ton_h
    return (Quantity(h2, "ton/h"), Quantity(water, "m3/h"), Quantity(chem, "ton/h"))


def power_capital(h_max: Quantity, econ: EconParams) -> Quantity:
    """Capital of the wind farm powering electrolysis [$].

    c_wind * (xi_p * H_bar) / capacity_factor, with xi_p * H_bar the
    electrolyzer electrical demand in kW.
    """
    h_kg_h = h_max.value_in("kg/h")
    if h_kg_h < 0:
        raise DomainError("h_max must be >= 0")
    demand_kw = econ.xi_p * h_kg_h
    return Quantity(econ.c_wind * demand_kw / econ.wind_capacity_factor, "$")


def hydrogen_capital(plant: PlantSpec, product: ProductSpec, beta: float,
                     econ: EconParams) -> Quantity:
    """Electrolyzer fleet capital, sized to the peak H2 demand [$]."""
    if not 0.0 <= beta <= 1.0:
        raise DomainError(f"beta must lie in [0, 1], got {beta!r}")
    cbar_kg_h = emissions_at_capacity(plant).value_in("kg/h")
    return Quantity(product.xi_h * beta * cbar_kg_h * econ.c_we, "$")


def chemical_revenue(product: ProductSpec, captured: TimeSeries, beta: float,
                     econ: EconParams) -> Quantity:
    """Daily product revenue as a negative cost [$ / day]."""
    if not 0.0 <= beta <= 1.0:
        raise DomainError(f"beta must lie in [0, 1], got {beta!r}")
    if captured.dim != (1, 0, -1, 0, 0, 0):
        raise UnitError(f"captured series must be a mass flow, got {captured.unit!r}")
    price = econ.price_of(product.name)  # [$ / ton]
    tons = captured.values_in("ton/h")
    return Quantity(-sum(price * product.xi_chi * beta * c for c in tons), "$/day")
