# Building a desalination plant versus piping water from the network: where
# is the break-even distance, and how does the transfer bill split into pipe
# capital and pumping energy?

import ewhnexus as ew
from ewhnexus.analysis import BreakevenQuery, breakeven_distance, transfer_cost_curve

cfg = ew.paper_2024()
methane = cfg.product("methane")

# ---------------------------------------------------------------
# Break-even distances under the calibrated preset
# ---------------------------------------------------------------
print("Desalination pays off beyond ...")
for plant in cfg.plants:
    econ = ew.econ_for_cell(cfg, plant, methane, 1.0)
    query = BreakevenQuery(plant=plant, product=methane, tolerance=0.5)
    d = breakeven_distance(query, econ)
    print(f"  {plant.name:<12} {d.value_in('km'):6.1f} km")

# ---------------------------------------------------------------
# Transfer cost surface for the biomass plant
# ---------------------------------------------------------------
plant = cfg.plant("biomass")
econ = ew.econ_for_cell(cfg, plant, methane, 1.0)
w_max = ew.nexus_rates(plant, methane, 1.0)[1].value_in("m3/h")
flows = [w_max * frac for frac in (0.0, 0.25, 0.5, 0.75, 1.0)]

print(f"\nDaily transfer cost for biomass (capacity {w_max:.0f} m3/h)")
print(f"  {'d [km]':>7} {'f [m3/h]':>9} {'capital $/d':>12} {'pumping $/d':>12} {'total $/d':>10}")
for cell in transfer_cost_curve(plant, [60.0, 260.0, 300.0], flows, econ):
    print(f"  {cell.distance_km:7.0f} {cell.flow_m3_h:9.1f} "
          f"{cell.capital_daily:12.0f} {cell.operational_daily:12.0f} "
          f"{cell.total_daily:10.0f}")

# Pumping grows with the cube of the flow, pipe capital linearly with the
# distance; at short distances the pipe wins, far out desalination does.
