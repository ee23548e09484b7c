# Defaults, budgets and suite grids
