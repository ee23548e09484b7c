# Braided Algebra Checker package
