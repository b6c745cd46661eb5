"""Critical intervals, standardisation and the recognising automaton.

Run with ``python demos/03_automata.py``; pass a path to also write DOT.
"""

import sys

from prolific import (
    build_automaton,
    critical_intervals,
    isomorphic_modulo_standardisation,
    standardize,
    to_dot,
)

u = (3, 7, 3, 4, 9, 9)
print("critical intervals:", " ".join(map(str, critical_intervals(u))))
print("standardised word:", standardize(u, (8, 12, 4, 6, 6, 3, 2, 8, 1)))

a = build_automaton((1, 4, 4, 1))
for state in sorted(a.states):
    moves = ", ".join(f"{i} -> {a.transitions[state, n]}" for n, i in enumerate(a.alphabet))
    print(state, "accepting" if a.is_accepting(state) else "", moves)

# Only the ordinal of each interval matters.
print("1441 ~ 1221:", isomorphic_modulo_standardisation((1, 4, 4, 1)), standardize((1, 4, 4, 1), (1, 4, 4, 1)))

if len(sys.argv) > 1:
    with open(sys.argv[1], "w") as fh:
        fh.write(to_dot(a))
    print("wrote", sys.argv[1])
