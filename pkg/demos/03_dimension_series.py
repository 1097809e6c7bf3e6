"""
Dimension formulas and series identities
========================================

The Poincare series of a strongly free quotient, the graded dimensions of
the associated filtrations, and the product identity tying them together.
"""

from mild2 import (
    WeightSignature,
    gamma_series,
    lower_central_dims,
    reduced_dims_bn,
    strongly_free_series,
    verify_cent_g,
    zassenhaus_dims,
)

# Four generators, four quadratic relators: the signature of both worked
# prime sets after elimination.
sig = WeightSignature(e=(1, 1, 1, 1), h=(2, 2, 2, 2))

# 1/(1 - 4t + 4t^2): dimensions of the quotient of the free algebra.
print("strongly free series:", strongly_free_series(sig, 7).coeffs)

# The same numerator over an extra (1 - t): dimensions over F2[pi].
print("gamma series:       ", gamma_series(sig, 6).coeffs)
print()

# Graded dimensions b_n of the reduced quotient Lie algebra, via Mobius
# inversion of the power sums of the denominator's inverse roots.
b = reduced_dims_bn(sig, 6)
print("b_n:", dict(b.pairs()))

# Lower central dimensions accumulate the b_n.
a = lower_central_dims(sig, 6)
print("a_n:", dict(a.pairs()))

# Restricted filtration dimensions extracted from the defining product
# prod (1 + t^n)^(c_n) = 1/(1 - 4t + 4t^2).
z = zassenhaus_dims(4, 4, 6)
print("zassenhaus:", dict(z.pairs()))
print()

# The central product identity holds degree by degree.
print("product identity to degree 10:", verify_cent_g(sig, 10))
