"""Minimal prolific compositions and the M_k family.

Run with ``python demos/04_minimal_sets.py``.
"""

import time

from prolific import (
    build_automaton,
    m_pattern,
    minconst_formula,
    minimal_prolific,
    minimal_prolific_oracle,
    prune_automaton,
    shortest_accepted,
)

g = prune_automaton(build_automaton((1, 2, 2, 1)))
for src, label, dst in sorted(g.edge_list()):
    print(src[0], f"--{label}-->", dst[0])
print("cheapest accepted word:", shortest_accepted(g))

for u in [(1, 4, 4, 1), (1, 2, 3, 1), (1, 3, 2, 1)]:
    print(u, set(map(str, minimal_prolific(u))), "formula:", minconst_formula(u))

# brute force agrees for small patterns
print(minimal_prolific_oracle((1, 2, 2, 1), 10))

print(f"{'k':>2} {'count':>5} {'ms':>7}  elements")
for k in range(9):
    start = time.perf_counter()
    result = minimal_prolific(m_pattern(k))
    ms = 1000 * (time.perf_counter() - start)
    print(f"{k:>2} {len(result):>5} {ms:>7.2f}  {' '.join(map(str, result))}")
