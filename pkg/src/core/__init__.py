# Exact verification engine: scalars, operators, algebras and checks
