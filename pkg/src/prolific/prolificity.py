"""Deciding whether a text composition is prolific for a pattern.

A text ``v`` is *prolific* for a pattern ``u`` when every one-cell extension
of ``v`` has strictly more occurrences of ``u`` than ``v`` does.  Three
deciders are provided and are expected to agree:

* :func:`is_prolific` runs a single left-to-right pass that tracks the
  longest pattern prefix seen so far together with the pattern suffix the
  rest of the text still has to contain.
* :func:`is_prolific_by_corollary` checks covering plus the insertion of a
  part 1 between every pair of adjacent parts larger than 1.
* :func:`is_prolific_oracle` applies the definition literally.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .compositions import (
    Composition,
    CompositionError,
    count_occurrences,
    extensions,
    is_covered,
)

__all__ = [
    "TraceEntry",
    "has_ones_at_ends",
    "local_requirement",
    "step",
    "suffix_trace",
    "is_prolific",
    "is_prolific_oracle",
    "is_prolific_by_corollary",
]


@dataclass(frozen=True)
class TraceEntry:
    """One row of a suffix trace: the state reached after reading ``part``."""

    index: int
    part: int
    prefix_len: int
    suffix_len: int

    def as_row(self) -> list[int]:
        return [self.index, self.part, self.prefix_len, self.suffix_len]


def has_ones_at_ends(pattern: Sequence[int]) -> bool:
    return len(pattern) > 0 and pattern[0] == 1 and pattern[-1] == 1


def local_requirement(pattern: Sequence[int], p: int) -> int:
    """Length of the suffix that must follow a part 1 inserted after prefix length `p`.

    The inserted 1 plays the latest pattern position ``i <= p + 1`` holding a
    1; what must still be found to its right is ``pattern[i:]`` (0-based
    ``i``), whose length is returned.
    """
    k = len(pattern)
    if k == 0 or pattern[0] != 1:
        raise CompositionError("the pattern must start with a part of size 1")
    if not 0 <= p <= k:
        raise ValueError(f"prefix length {p} outside 0..{k}")
    i = min(p, k - 1)
    while pattern[i] != 1:
        i -= 1
    return k - i - 1


def step(pattern: Sequence[int], state: tuple[int, int], part: int) -> tuple[int, int]:
    """Read one `part` from state ``(prefix_len, suffix_len)``."""
    p, s = state
    k = len(pattern)
    if p < k and part >= pattern[p]:
        p += 1
    if s > 0 and part >= pattern[k - s]:
        s -= 1
    return p, max(s, local_requirement(pattern, p))


def _check_ends(pattern: Sequence[int]) -> None:
    if not has_ones_at_ends(pattern):
        raise CompositionError("the pattern must start and end with a part of size 1")


def suffix_trace(pattern: Sequence[int], text: Sequence[int]) -> list[TraceEntry]:
    _check_ends(pattern)
    if not text:
        raise CompositionError("the text must be non-empty")
    state = (0, len(pattern))
    trace = []
    for index, part in enumerate(text, start=1):
        state = step(pattern, state, part)
        trace.append(TraceEntry(index, part, *state))
    return trace


def is_prolific(pattern: Sequence[int], text: Sequence[int]) -> bool:
    """Decide prolificity in one pass over `text`.

    Patterns that do not start and end with 1 have no prolific texts at all.
    The empty text is rejected rather than treated as prolific for ``(1)``.
    """
    if not pattern:
        raise CompositionError("the pattern must be non-empty")
    if not text:
        raise CompositionError("the text must be non-empty")
    if not has_ones_at_ends(pattern):
        return False
    state = (0, len(pattern))
    for part in text:
        state = step(pattern, state, part)
    return state[1] == 0


def is_prolific_oracle(pattern: Sequence[int], text: Sequence[int], counter=count_occurrences) -> bool:
    """Brute force: every one-cell extension must raise the occurrence count.

    `counter` picks the occurrence counting routine; any correct counter
    gives the same answer.
    """
    if not pattern or not text:
        raise CompositionError("pattern and text must be non-empty")
    base = counter(pattern, text)
    return all(counter(pattern, e) > base for e in extensions(text))


def is_prolific_by_corollary(pattern: Sequence[int], text: Sequence[int]) -> bool:
    """Covering plus a new occurrence for each 1 squeezed between two parts > 1.

    Besides interior gaps, a 1 placed before a leading part > 1 or after a
    trailing part > 1 is also tried.
    """
    _check_ends(pattern)
    if not text:
        raise CompositionError("the text must be non-empty")
    text = Composition(text)
    if not is_covered(pattern, text):
        return False
    base = count_occurrences(pattern, text)
    gaps = [i for i in range(1, len(text)) if text[i - 1] > 1 and text[i] > 1]
    if text[0] > 1:
        gaps.append(0)
    if text[-1] > 1:
        gaps.append(len(text))
    for i in gaps:
        if count_occurrences(pattern, text[:i] + (1,) + text[i:]) <= base:
            return False
    return True
