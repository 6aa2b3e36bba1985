"""Decision-support layer: scenario sweeps, water-supply break-even distance,
transfer cost curves, and carbon-penalty thresholds.

All sweep cells are independent pure evaluations ordered by (plant, product,
beta); a failing cell is reported with its coordinates without aborting the
rest of the sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from . import economics, water
from .conversion import ProductSpec, nexus_rates
from .economics import ScenarioConfig, ScenarioResult, total_daily_cost
from .quantities import DomainError, EconParams, PlantSpec, Quantity

# (plant, product, beta, water_mode) -> EconParams; lets a calibrated preset
# resolve plant-specific costs without changing any formula
EconResolver = Callable[[PlantSpec, ProductSpec | None, float, water.WaterMode], EconParams]


def _default_resolver(econ: EconParams) -> EconResolver:
    def resolve(plant, product, beta, mode):
        return econ
    return resolve


@dataclass(frozen=True)
class SweepGrid:
    """Cartesian scenario grid; a beta = 0 storage row is added per plant."""

    plants: tuple[PlantSpec, ...]
    products: tuple[ProductSpec, ...]
    betas: tuple[float, ...] = (0.5, 1.0)
    water_mode: water.WaterMode = water.Desalination()

    def __post_init__(self):
        object.__setattr__(self, "plants", tuple(self.plants))
        object.__setattr__(self, "products", tuple(self.products))
        object.__setattr__(self, "betas", tuple(float(b) for b in self.betas))
        if not self.plants:
            raise DomainError("sweep grid needs at least one plant")
        for b in self.betas:
            if not 0.0 <= b <= 1.0:
                raise DomainError(f"beta must lie in [0, 1], got {b!r}")


@dataclass(frozen=True)
class SweepCell:
    """One evaluated grid cell; exactly one of result/error is set."""

    plant: str
    product: str          # "" for the storage row
    beta: float
    result: ScenarioResult | None = None
    error: str | None = None


def scenario_sweep(grid: SweepGrid, econ: EconParams,
                   econ_resolver: EconResolver | None = None) -> tuple[SweepCell, ...]:
    """Evaluate every cell of the grid plus one storage row per plant.

    Ordering is deterministic: plants in the given order, the storage row
    first, then products in the given order with betas ascending.
    """
    resolve = econ_resolver if econ_resolver is not None else _default_resolver(econ)
    cells: list[SweepCell] = []
    betas = tuple(sorted(grid.betas))
    for plant in grid.plants:
        coords = [(None, 0.0)] + [(p, b) for p in grid.products for b in betas]
        for product, beta in coords:
            name = product.name if product is not None else ""
            try:
                cell_econ = resolve(plant, product, beta, grid.water_mode)
                cfg = ScenarioConfig(plant=plant, econ=cell_econ, beta=beta,
                                     product=product, water_mode=grid.water_mode)
                cells.append(SweepCell(plant.name, name, beta, result=total_daily_cost(cfg)))
            except (DomainError, ValueError) as exc:
                cells.append(SweepCell(plant.name, name, beta,
                                       error=f"cell ({plant.name}, {name or '-'}, "
                                             f"beta={beta:g}): {exc}"))
    return tuple(cells)


@dataclass(frozen=True)
class BreakevenQuery:
    """Search window for the water-transfer break-even distance."""

    plant: PlantSpec
    product: ProductSpec
    distance_bounds: tuple[float, float] = (1.0, 1000.0)   # [km]
    tolerance: float = 0.5                                  # [km]

    def __post_init__(self):
        lo, hi = self.distance_bounds
        object.__setattr__(self, "distance_bounds", (float(lo), float(hi)))
        if not lo < hi:
            raise DomainError("distance bounds must satisfy d_lo < d_hi")
        if not self.tolerance > 0:
            raise DomainError("tolerance must be positive")


class NoCrossingError(DomainError):
    """The cost difference does not change sign over the search window."""

    def __init__(self, message: str, g_lo: float, g_hi: float):
        super().__init__(message)
        self.g_lo = g_lo
        self.g_hi = g_hi


def _transfer_minus_desal(query: BreakevenQuery, econ: EconParams) -> Callable[[float], float]:
    """Daily-cost gap between piping water from distance d and desalinating.

    Both alternatives are full scenarios at beta = 1, so every non-water term
    cancels in the difference.
    """
    desal_cfg = ScenarioConfig(plant=query.plant, econ=econ, beta=1.0,
                               product=query.product, water_mode=water.Desalination())
    desal_cost = total_daily_cost(desal_cfg).daily_cost.value_in("$/day")

    def g(d_km: float) -> float:
        cfg = ScenarioConfig(plant=query.plant, econ=econ, beta=1.0,
                             product=query.product,
                             water_mode=water.NetworkTransfer(Quantity(d_km, "km")))
        return total_daily_cost(cfg).daily_cost.value_in("$/day") - desal_cost

    return g


def breakeven_distance(query: BreakevenQuery, econ: EconParams) -> Quantity:
    """Pipe length at which network transfer stops beating desalination [km].

    Bisection on the monotone daily-cost difference, to within the query
    tolerance.  Raises NoCrossingError (with both endpoint gaps) if one
    option dominates over the whole window.
    """
    g = _transfer_minus_desal(query, econ)
    lo, hi = query.distance_bounds
    g_lo, g_hi = g(lo), g(hi)
    if g_lo == 0.0:
        return Quantity(lo, "km")
    if g_hi == 0.0:
        return Quantity(hi, "km")
    if (g_lo > 0) == (g_hi > 0):
        raise NoCrossingError(
            f"no break-even in [{lo:g}, {hi:g}] km: cost gap goes from "
            f"{g_lo:+.2f} to {g_hi:+.2f} $/day", g_lo, g_hi)
    while hi - lo > query.tolerance:
        mid = 0.5 * (lo + hi)
        g_mid = g(mid)
        if g_mid == 0.0:
            return Quantity(mid, "km")
        if (g_mid > 0) == (g_hi > 0):
            hi, g_hi = mid, g_mid
        else:
            lo, g_lo = mid, g_mid
    return Quantity(0.5 * (lo + hi), "km")


@dataclass(frozen=True)
class CurveCell:
    """One (distance, flow) point of the transfer cost surface [$ / day]."""

    distance_km: float
    flow_m3_h: float
    capital_daily: float | None = None
    operational_daily: float | None = None
    total_daily: float | None = None
    error: str | None = None


def transfer_cost_curve(plant: PlantSpec, distances: Sequence[float],
                        flows: Sequence[float], econ: EconParams,
                        product: ProductSpec | None = None) -> tuple[CurveCell, ...]:
    """Daily transfer cost split per (distance, flow) cell.

    Capital is the annualized pipe charge for the plant's full-reuse water
    capacity; operations price the pumping power at each flow.  Flow bound
    violations are reported per cell.
    """
    if not distances or not flows:
        raise DomainError("distances and flows must be non-empty")
    if product is None:
        from .conversion import METHANE
        product = METHANE
    _, w_max, _ = nexus_rates(plant, product, 1.0)
    policy = economics.AnnualizationPolicy.from_econ(econ)
    cells: list[CurveCell] = []
    for d in distances:
        mode = water.NetworkTransfer(Quantity(float(d), "km"))
        plan = water.WaterSupplyPlan(mode, w_max)
        capital = water.water_capital(plan, econ)
        cap_daily = economics.daily_capital_charge(capital, policy).value_in("$/day")
        r_w = water.effective_r_w(econ, float(d))
        for f in flows:
            try:
                f_val = float(f)
                if f_val < 0 or f_val > w_max.value_in("m3/h"):
                    raise DomainError(
                        f"flow {f_val:g} m3/h outside [0, {w_max.value_in('m3/h'):g}]")
                pump_kw = water.pump_power(Quantity(f_val, "m3/h"), r_w, econ.eta_pump)
                op_daily = 24.0 * econ.elec_price * pump_kw.value_in("kW")
                cells.append(CurveCell(float(d), f_val, cap_daily, op_daily,
                                       cap_daily + op_daily))
            except DomainError as exc:
                cells.append(CurveCell(float(d), float(f),
                                       error=f"cell (d={d:g} km, f={f:g} m3/h): {exc}"))
    return tuple(cells)


@dataclass(frozen=True)
class StoreAll:
    """Capture everything and pipe it to storage (beta = 0)."""


@dataclass(frozen=True)
class ReuseAll:
    """Capture everything and convert it to the given product (beta = 1)."""

    product: ProductSpec


Strategy = StoreAll | ReuseAll


def penalty_threshold(plant: PlantSpec, strategy: Strategy, econ: EconParams,
                      water_mode: water.WaterMode = water.Desalination()) -> Quantity:
    """Minimum carbon penalty making the strategy beat emitting-and-paying [$ / ton]."""
    if isinstance(strategy, StoreAll):
        cfg = ScenarioConfig(plant=plant, econ=econ, beta=0.0)
    elif isinstance(strategy, ReuseAll):
        cfg = ScenarioConfig(plant=plant, econ=econ, beta=1.0,
                             product=strategy.product, water_mode=water_mode)
    else:
        raise DomainError(f"unknown strategy {strategy!r}")
    return total_daily_cost(cfg).carbon_penalty
