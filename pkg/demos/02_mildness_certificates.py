"""
Certifying mildness
===================

The two sufficient criteria (circuit and rank), the witness partitions
they produce, and the verdicts on three contrasting prime sets.
"""

from mild2 import check_mild, find_mild_partition, koch_presentation
from mild2.linking import eliminate_generator

# First prime set: the reduced relators form a 4-cycle with the right
# square pattern, so the fast circuit criterion certifies mildness.
report = check_mild(koch_presentation((41, 13, 5, 3, 19)))
print(report.text())
print()

# Second prime set: not a circuit, but the exhaustive partition search
# finds a split S / Sp for which the rank criterion holds.
report = check_mild(koch_presentation((5, 29, 7, 11, 3)))
print(report.text())
print()

# A pair of primes that do not link at all: every relator has zero
# quadratic part, so the degree-2 criteria say nothing.
report = check_mild(koch_presentation((17, 13)))
print(report.text())
print()

# The partition search can also be used directly on relator lists.
reduced = eliminate_generator(koch_presentation((5, 29, 7, 11, 3)))
witness = find_mild_partition(reduced.relators)
print(f"witness partition: S = {set(witness.S)}, Sp = {set(witness.Sp)}")
