"""Unit-typed quantities and the core domain types shared by every module.

Dimensions are tracked over six engineering bases: mass [kg], energy [kWh],
time [h], money [$], volume [m3] and length [m].  Every supported unit maps
onto a dimension vector plus a scale factor to the canonical base, so mixing
incompatible quantities (say, adding $/ton to kWh/kg) fails loudly instead of
silently producing garbage.  Multiplication and division compose dimension
vectors, which is all the cost formulas need.

Values are kept in the unit they were given and only rescaled on demand.
That keeps round-decimal inputs (230 g/kWh, 15 $/ton, 500 MW) bit-exact
through the common arithmetic paths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping


class UnitError(ValueError):
    """Combination or conversion of dimensionally incompatible quantities."""


class DomainError(ValueError):
    """Input outside the physical or economic domain of an operation."""


# Dimension exponents over (mass, energy, time, money, volume, length).
Dim = tuple[int, int, int, int, int, int]

DIMENSIONLESS_DIM: Dim = (0, 0, 0, 0, 0, 0)

_BASE_NAMES = ("kg", "kWh", "h", "$", "m3", "m")


def _d(mass: int = 0, energy: int = 0, time: int = 0, money: int = 0,
       volume: int = 0, length: int = 0) -> Dim:
    return (mass, energy, time, money, volume, length)


# unit name -> (dimension, scale to canonical base units as an integer ratio).
# Rational scales keep conversions correctly rounded: 820 g/kWh becomes
# 820/1000 kg/kWh, one exact division, not a multiply by an inexact 1e-3.
UNITS: dict[str, tuple[Dim, tuple[int, int]]] = {
    "dimensionless": (DIMENSIONLESS_DIM, (1, 1)),
    # mass
    "kg": (_d(mass=1), (1, 1)),
    "g": (_d(mass=1), (1, 1000)),
    "ton": (_d(mass=1), (1000, 1)),
    # energy
    "kWh": (_d(energy=1), (1, 1)),
    "MWh": (_d(energy=1), (1000, 1)),
    # time
    "h": (_d(time=1), (1, 1)),
    "day": (_d(time=1), (24, 1)),
    # money
    "$": (_d(money=1), (1, 1)),
    "M$": (_d(money=1), (1000000, 1)),
    # volume
    "m3": (_d(volume=1), (1, 1)),
    "L": (_d(volume=1), (1, 1000)),
    # length
    "m": (_d(length=1), (1, 1)),
    "km": (_d(length=1), (1000, 1)),
    # power
    "kW": (_d(energy=1, time=-1), (1, 1)),
    "MW": (_d(energy=1, time=-1), (1000, 1)),
    # mass flow
    "kg/h": (_d(mass=1, time=-1), (1, 1)),
    "ton/h": (_d(mass=1, time=-1), (1000, 1)),
    "ton/day": (_d(mass=1, time=-1), (1000, 24)),
    # volume flow
    "m3/h": (_d(volume=1, time=-1), (1, 1)),
    "L/h": (_d(volume=1, time=-1), (1, 1000)),
    # tariffs and unit costs
    "$/kWh": (_d(money=1, energy=-1), (1, 1)),
    "$/kg": (_d(money=1, mass=-1), (1, 1)),
    "$/ton": (_d(money=1, mass=-1), (1, 1000)),
    "$/kW": (_d(money=1, energy=-1, time=1), (1, 1)),
    "$/(m3/h)": (_d(money=1, volume=-1, time=1), (1, 1)),
    "$/(kg/h)": (_d(money=1, mass=-1, time=1), (1, 1)),
    "$/(ton/day)": (_d(money=1, mass=-1, time=1), (24, 1000)),
    "$/m": (_d(money=1, length=-1), (1, 1)),
    "$/km": (_d(money=1, length=-1), (1, 1000)),
    "$/h": (_d(money=1, time=-1), (1, 1)),
    "$/day": (_d(money=1, time=-1), (1, 24)),
    # specific energies
    "kWh/kg": (_d(energy=1, mass=-1), (1, 1)),
    "kWh/m3": (_d(energy=1, volume=-1), (1, 1)),
    # emission factors
    "kg/kWh": (_d(mass=1, energy=-1), (1, 1)),
    "g/kWh": (_d(mass=1, energy=-1), (1, 1000)),
}

# Preferred display name for a handful of derived dimensions (scale 1 only).
_CANONICAL_NAMES: dict[Dim, str] = {}
for _name, (_dim, _scale) in UNITS.items():
    if _scale == (1, 1) and _dim not in _CANONICAL_NAMES:
        _CANONICAL_NAMES[_dim] = _name


def _normalize(unit: str) -> str:
    # accept the unicode superscript spelling used in printed tables
    return unit.replace("³", "3").strip()


def _parse_dim_label(unit: str) -> tuple[Dim, tuple[int, int]] | None:
    """Recognize synthesized labels like 'kg^1*h^-1' (always scale 1)."""
    exponents = dict.fromkeys(_BASE_NAMES, 0)
    for part in unit.split("*"):
        name, caret, exp = part.partition("^")
        if not caret or name not in exponents or exponents[name] != 0:
            return None
        try:
            exponents[name] = int(exp)
        except ValueError:
            return None
    return tuple(exponents[n] for n in _BASE_NAMES), (1, 1)


def _unit_entry(unit: str) -> tuple[Dim, tuple[int, int]]:
    unit = _normalize(unit)
    try:
        return UNITS[unit]
    except KeyError:
        parsed = _parse_dim_label(unit)
        if parsed is not None:
            return parsed
        raise UnitError(f"unknown unit {unit!r}") from None


def _scale_value(value: float, scale: tuple[int, int]) -> float:
    num, den = scale
    if num != 1:
        value = value * num
    if den != 1:
        value = value / den
    return value


def _unscale_value(value: float, scale: tuple[int, int]) -> float:
    num, den = scale
    if den != 1:
        value = value * den
    if num != 1:
        value = value / num
    return value


def _dim_label(dim: Dim) -> str:
    if dim in _CANONICAL_NAMES:
        return _CANONICAL_NAMES[dim]
    parts = [f"{name}^{exp}" for name, exp in zip(_BASE_NAMES, dim) if exp]
    return "*".join(parts) if parts else "dimensionless"


@dataclass(frozen=True)
class Quantity:
    """A finite magnitude tagged with one of the registered units."""

    magnitude: float
    unit: str = "dimensionless"

    def __post_init__(self):
        dim, _ = _unit_entry(self.unit)  # validates the unit name
        object.__setattr__(self, "unit", _normalize(self.unit))
        if not isinstance(self.magnitude, (int, float)) or isinstance(self.magnitude, bool):
            raise UnitError(f"magnitude must be a real number, got {self.magnitude!r}")
        object.__setattr__(self, "magnitude", float(self.magnitude))
        if not math.isfinite(self.magnitude):
            raise UnitError(f"magnitude must be finite, got {self.magnitude!r}")

    @property
    def dim(self) -> Dim:
        return _unit_entry(self.unit)[0]

    @property
    def canonical(self) -> float:
        """Magnitude expressed in the canonical base units."""
        _, scale = _unit_entry(self.unit)
        return _scale_value(self.magnitude, scale)

    def to(self, unit: str) -> "Quantity":
        unit = _normalize(unit)
        if unit == self.unit:
            return self
        dim, scale = _unit_entry(unit)
        if dim != self.dim:
            raise UnitError(f"cannot convert {self.unit!r} to {unit!r}")
        return Quantity(_unscale_value(self.canonical, scale), unit)

    def value_in(self, unit: str) -> float:
        return self.to(unit).magnitude

    def _require_same_dim(self, other: "Quantity", op: str) -> None:
        if not isinstance(other, Quantity):
            raise UnitError(f"cannot {op} {type(other).__name__} and Quantity")
        if other.dim != self.dim:
            raise UnitError(f"cannot {op} {self.unit!r} and {other.unit!r}")

    def __add__(self, other: "Quantity") -> "Quantity":
        self._require_same_dim(other, "add")
        return Quantity(self.magnitude + other.value_in(self.unit), self.unit)

    def __sub__(self, other: "Quantity") -> "Quantity":
        self._require_same_dim(other, "subtract")
        return Quantity(self.magnitude - other.value_in(self.unit), self.unit)

    def __neg__(self) -> "Quantity":
        return Quantity(-self.magnitude, self.unit)

    def __mul__(self, other):
        if isinstance(other, Quantity):
            dim = tuple(a + b for a, b in zip(self.dim, other.dim))
            return Quantity(self.canonical * other.canonical, _dim_label_checked(dim))
        return Quantity(self.magnitude * float(other), self.unit)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Quantity):
            dim = tuple(a - b for a, b in zip(self.dim, other.dim))
            return Quantity(self.canonical / other.canonical, _dim_label_checked(dim))
        return Quantity(self.magnitude / float(other), self.unit)

    def _cmp_value(self, other: "Quantity") -> float:
        self._require_same_dim(other, "compare")
        return other.canonical

    def __lt__(self, other):
        return self.canonical < self._cmp_value(other)

    def __le__(self, other):
        return self.canonical <= self._cmp_value(other)

    def __gt__(self, other):
        return self.canonical > self._cmp_value(other)

    def __ge__(self, other):
        return self.canonical >= self._cmp_value(other)

    def __str__(self) -> str:
        return f"{self.magnitude:g} {self.unit}"


def _dim_label_checked(dim) -> str:
    # synthesized labels parse back through _parse_dim_label, so no registry
    # mutation is needed and the module stays free of shared mutable state
    return _dim_label(tuple(dim))


@dataclass(frozen=True)
class PlantSpec:
    """A conventional power plant targeted for the retrofit."""

    name: str
    capacity: Quantity          # electrical capacity [kW]
    emission_factor: Quantity   # carbon emitted per unit generated [kg/kWh]

    def __post_init__(self):
        if self.capacity.dim != _d(energy=1, time=-1):
            raise UnitError(f"capacity must be a power, got {self.capacity.unit!r}")
        if self.emission_factor.dim != _d(mass=1, energy=-1):
            raise UnitError(
                f"emission_factor must be mass per energy, got {self.emission_factor.unit!r}")
        if not self.capacity.magnitude > 0:
            raise DomainError(f"plant {self.name!r}: capacity must be positive")
        if self.emission_factor.magnitude < 0:
            raise DomainError(f"plant {self.name!r}: emission_factor must be >= 0")


def emissions_at_capacity(plant: PlantSpec) -> Quantity:
    """Carbon emission rate with the plant at full output [ton/h]."""
    kg_per_h = plant.capacity.value_in("kW") * plant.emission_factor.value_in("kg/kWh")
    return Quantity(kg_per_h / 1000.0, "ton/h")


@dataclass(frozen=True)
class EconParams:
    """Cost and process parameters, one named field per model symbol.

    Scalars are stored in the unit stated on each field; the config layer
    converts arbitrary "value unit" inputs into these fields.  ``c_ccs`` and
    ``c_sw`` have no defensible defaults, so they stay unset until a config
    or preset provides them; using an operation that needs an unset cost is
    an error at that call.
    """

    elec_price: float                       # electricity tariff [$ / kWh]
    r_cts: float                            # carbon transfer operating cost [$ / ton]
    r_ccs: float                            # carbon capture operating cost [$ / ton]
    c_cts: float                            # carbon pipeline capital [$ per ton/day]
    c_wind: float                           # wind farm capital [$ / kW]
    c_des: float                            # desalination capital [$ per m3/h]
    c_tw: float                             # water pipeline capital [$ / m]
    wind_capacity_factor: float             # annual net capacity factor [-]
    eta_pump: float                         # pump efficiency [-]
    c_ccs: float | None = None              # capture plant capital [$ per ton/day]
    c_sw: float | None = None               # solar-seawater capital [$ per m3/h]
    c_we: float = 500.0                     # electrolyzer capital [$ per kg/h of H2]
    xi_p: float = 52.5                      # electrolysis energy demand [kWh / kg H2]
    r_w_per_100km: float = 2.0e-4           # pipe head-loss coefficient [h2/m5 per 100 km]
    e_des: tuple[float, ...] = (3.5, 3.8, 4.1, 4.4)   # segment energies [kWh / m3]
    interest_rate: float = 0.05             # capital interest rate [-]
    horizon_years: int = 20                 # payback horizon [years]
    product_prices: Mapping[str, float] = field(default_factory=dict)  # [$ / ton]

    def __post_init__(self):
        object.__setattr__(self, "e_des", tuple(float(e) for e in self.e_des))
        object.__setattr__(self, "product_prices",
                           dict((k, float(v)) for k, v in self.product_prices.items()))
        if not 0.0 < self.wind_capacity_factor <= 1.0:
            raise DomainError("wind_capacity_factor must lie in (0, 1]")
        if not 0.0 < self.eta_pump <= 1.0:
            raise DomainError("eta_pump must lie in (0, 1]")
        if self.horizon_years < 1 or int(self.horizon_years) != self.horizon_years:
            raise DomainError("horizon_years must be an integer >= 1")
        if self.interest_rate < 0:
            raise DomainError("interest_rate must be >= 0")
        if len(self.e_des) != 4:
            raise DomainError("e_des needs exactly 4 segment coefficients")
        nonneg = {
            "elec_price": self.elec_price, "r_cts": self.r_cts, "r_ccs": self.r_ccs,
            "c_cts": self.c_cts, "c_wind": self.c_wind, "c_des": self.c_des,
            "c_tw": self.c_tw, "c_we": self.c_we, "xi_p": self.xi_p,
            "r_w_per_100km": self.r_w_per_100km,
        }
        for name, value in list(nonneg.items()) + [
                (f"e_des[{i+1}]", e) for i, e in enumerate(self.e_des)] + [
                (f"product_prices[{k}]", v) for k, v in self.product_prices.items()]:
            if not math.isfinite(value) or value < 0:
                raise DomainError(f"{name} must be finite and >= 0, got {value!r}")
        for name, value in (("c_ccs", self.c_ccs), ("c_sw", self.c_sw)):
            if value is not None and (not math.isfinite(value) or value < 0):
                raise DomainError(f"{name} must be finite and >= 0 when set")

    def price_of(self, product_name: str) -> float:
        try:
            return self.product_prices[product_name]
        except KeyError:
            raise DomainError(f"no market price configured for product {product_name!r}") from None


@dataclass(frozen=True)
class TimeSeries:
    """Hourly profile of a physical flow; values share one unit, step is 1 h."""

    values: tuple[float, ...]
    unit: str

    def __post_init__(self):
        _unit_entry(self.unit)
        object.__setattr__(self, "unit", _normalize(self.unit))
        vals = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise DomainError("time series must not be empty")
        for i, v in enumerate(vals):
            if not math.isfinite(v) or v < 0:
                raise DomainError(f"series value at step {i} must be finite and >= 0, got {v!r}")

    def __len__(self) -> int:
        return len(self.values)

    def values_in(self, unit: str) -> tuple[float, ...]:
        """Values rescaled to another unit of the same dimension."""
        unit = _normalize(unit)
        if unit == self.unit:
            return self.values
        dim_self, scale_self = _unit_entry(self.unit)
        dim, scale = _unit_entry(unit)
        if dim != dim_self:
            raise UnitError(f"cannot express {self.unit!r} series in {unit!r}")
        return tuple(_unscale_value(_scale_value(v, scale_self), scale)
                     for v in self.values)

    def total(self) -> Quantity:
        """Sum over all steps times the 1 h step, e.g. ton/h series -> ton."""
        rate_dim = self.dim
        total_dim = tuple(a + b for a, b in zip(rate_dim, _d(time=1)))
        _, scale = _unit_entry(self.unit)
        return Quantity(_scale_value(math.fsum(self.values), scale),
                        _dim_label_checked(total_dim))

    @property
    def dim(self) -> Dim:
        return _unit_entry(self.unit)[0]


def constant_profile(rate: Quantity, hours: int) -> TimeSeries:
    """Flat full-load profile of ``hours`` one-hour steps at ``rate``."""
    if hours < 1 or int(hours) != hours:
        raise DomainError(f"hours must be an integer >= 1, got {hours!r}")
    if rate.magnitude < 0:
        raise DomainError("rate must be >= 0 for a physical flow profile")
    return TimeSeries((rate.magnitude,) * int(hours), rate.unit)


CAPITAL = "capital"
OPERATIONAL = "operational"
REVENUE = "revenue"
_KINDS = (CAPITAL, OPERATIONAL, REVENUE)


@dataclass(frozen=True)
class LedgerItem:
    """One itemized flow: a capital stock [$] or a daily flow [$/day]."""

    label: str
    term: str     # tag of the producing formula, e.g. "ccss-capital"
    kind: str     # capital | operational | revenue
    amount: float
    unit: str     # "$" or "$/day"

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise DomainError(f"ledger kind must be one of {_KINDS}, got {self.kind!r}")
        if self.unit not in ("$", "$/day"):
            raise DomainError(f"ledger unit must be '$' or '$/day', got {self.unit!r}")
        if not math.isfinite(self.amount):
            raise DomainError(f"ledger amount must be finite ({self.label})")


@dataclass(frozen=True)
class CostLedger:
    """Itemized cost breakdown whose totals are exact sums of the items.

    Totals use ``math.fsum``, so they are independent of item order.
    """

    items: tuple[LedgerItem, ...]

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))

    def _sum(self, unit: str, kind: str | None = None) -> float:
        return math.fsum(i.amount for i in self.items
                         if i.unit == unit and (kind is None or i.kind == kind))

    def capital_total(self) -> float:
        """Total capital stock [$]."""
        return self._sum("$")

    def daily_total(self) -> float:
        """Net daily cost [$ / day], capital charge plus flows."""
        return self._sum("$/day")

    def operational_total(self) -> float:
        return self._sum("$/day", OPERATIONAL)

    def revenue_total(self) -> float:
        return self._sum("$/day", REVENUE)
