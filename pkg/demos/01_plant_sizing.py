# How much hydrogen, water and product does it take to reuse a power plant's
# captured carbon?  Walks the sizing chain for the three reference plants.

import ewhnexus as ew

cfg = ew.paper_2024()

# ---------------------------------------------------------------
# Full-load carbon streams
# ---------------------------------------------------------------
print("Carbon emissions at full load")
for plant in cfg.plants:
    c = ew.emissions_at_capacity(plant)
    print(f"  {plant.name:<12} {c.value_in('ton/h'):6.0f} ton/h "
          f"({c.value_in('ton/h') * 24:7.0f} ton/day)")

# ---------------------------------------------------------------
# Stoichiometric ratios per kg of reused CO2
# ---------------------------------------------------------------
print("\nPer kg of CO2 reused")
for product in cfg.products:
    r = ew.stoichiometry(product)
    print(f"  {product.name:<9} H2 {r.xi_h * 1000:6.1f} g   "
          f"feed water {r.water_demand:5.3f} L   product {r.xi_chi * 1000:6.1f} g")

# ---------------------------------------------------------------
# Section sizing at full reuse (beta = 1)
# ---------------------------------------------------------------
print("\nSection sizing at beta = 1  (H2 ton/h | water m3/h | product ton/h)")
for product in cfg.products:
    print(f"  {product.name}")
    for plant in cfg.plants:
        h2, water, chem = ew.nexus_rates(plant, product, 1.0)
        print(f"    {plant.name:<12} {h2.value_in('ton/h'):6.1f} | "
              f"{water.value_in('m3/h'):6.1f} | {chem.value_in('ton/h'):6.1f}")

# The wind farm is sized so its average output covers the electrolyzer load.
plant = cfg.plant("biomass")
h2, _, _ = ew.nexus_rates(plant, cfg.product("methane"), 1.0)
capital = ew.power_capital(h2, cfg.econ)
demand_kw = cfg.econ.xi_p * h2.value_in("kg/h")
print(f"\nBiomass/methane electrolyzer demand: {demand_kw / 1e6:.2f} GW "
      f"-> wind capital ${capital.value_in('$') / 1e9:.2f} B")
