"""
From a prime set to a presentation
==================================

Linking data of an ordered set of odd primes, the induced presentation,
and the elimination of a redundant generator.
"""

from mild2 import eliminate_generator, koch_presentation, linking_data

# The square classes a_i and the linking matrix ell_ij are read off the
# primes: a_i records p_i = 3 (mod 4), and ell_ij records whether p_i is a
# quadratic nonresidue mod p_j.
S = (41, 13, 5, 3, 19)
data = linking_data(S)
print(data.text())
print()

# Each prime contributes one relator r_i = x_i^(2 a_i) prod [x_i, x_j]^(ell_ij),
# plus the product relation r = prod x_i^(a_i).
pres = koch_presentation(S)
print(pres.text())
print()

# The product relation lets one generator be rewritten in terms of the
# others; the default choice is the largest index with a nonzero exponent.
reduced = eliminate_generator(pres)
print(reduced.text())
print()
print("history:", "; ".join(reduced.history))
