"""Containment, supports and occurrence counts.

Run with ``python demos/01_counting_occurrences.py``.
"""

from prolific import (
    contains,
    count_occurrences,
    count_occurrences_oracle,
    extensions,
    is_covered,
    subcomposition,
    supports,
)

u = (1, 2, 2, 3, 2, 1)
v = (1, 3, 2, 2, 4, 2, 1, 1)

# The 3 in u can only go to the 4 in v, which pins most of the embedding down.
print("contains:", contains(u, v))
found = sorted(supports(u, v))
print(len(found), "supports:")
for x in found:
    print("  ", x, "->", subcomposition(v, x))

# Each selected part of v contributes comb(v part, u part) occurrences.
print("occurrences:", count_occurrences(u, v), "(recursion:", count_occurrences_oracle(u, v), ")")

# Adding a cell anywhere never loses occurrences; whether it always *gains*
# some is the question the rest of the package answers.
for e in sorted(extensions((1, 2, 1))):
    print("  ", e, count_occurrences((1, 1), e))

print("covered:", is_covered((1, 2, 1), (1, 2, 1, 5)), is_covered((1, 2, 2, 1), (1, 2, 1, 2, 1)))
