"""Three ways to decide prolificity, and the single-pass trace.

Run with ``python demos/02_deciding_prolificity.py``.
"""

from prolific import (
    is_prolific,
    is_prolific_by_corollary,
    is_prolific_oracle,
    suffix_trace,
)

u = (1, 2, 1, 3, 2, 2, 1)
v = (1, 5, 5, 1, 2, 4, 4, 3, 2, 2, 1)

print(f"{'i':>2} {'v_i':>3}  prefix    suffix still needed")
for e in suffix_trace(u, v):
    prefix = "".join(map(str, u[: e.prefix_len]))
    suffix = "".join(map(str, u[len(u) - e.suffix_len:])) or "-"
    print(f"{e.index:>2} {e.part:>3}  {prefix:<9} {suffix}")
print("prolific:", is_prolific(u, v))

## the three deciders agree
for text in [(1, 4, 4, 1), (1, 4, 4, 4, 1), (1, 4, 1, 4, 1)]:
    print(
        text,
        is_prolific((1, 4, 4, 1), text),
        is_prolific_oracle((1, 4, 4, 1), text),
        is_prolific_by_corollary((1, 4, 4, 1), text),
    )

## a pattern not starting and ending with 1 has no prolific texts
print("(2,1) vs (1,2,1,1):", is_prolific((2, 1), (1, 2, 1, 1)))
