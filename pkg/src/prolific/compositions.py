"""Integer compositions, containment and occurrence counting.

A composition is a finite sequence of positive integers (its *parts*).
Compositions are represented by :class:`Composition`, an immutable tuple
subclass, so they hash, compare and slice like ordinary tuples::

    >>> c = parse_composition("1441")
    >>> c, c.size, len(c)
    (Composition(1, 4, 4, 1), 10, 4)

Containment is the subsequence order with part-wise domination: ``u`` is
contained in ``v`` when some increasing choice of ``len(u)`` parts of ``v``
is at least as large as ``u`` part by part.  An occurrence additionally
chooses ``u[j]`` cells inside each selected part, so each selected part
contributes a binomial factor to the occurrence count.
"""

from __future__ import annotations

import itertools
import operator
import re
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

__all__ = [
    "Composition",
    "CompositionError",
    "SupportLimitError",
    "DEFAULT_SUPPORT_LIMIT",
    "parse_composition",
    "reverse",
    "contains",
    "longest_prefix_contained",
    "longest_suffix_contained",
    "supports",
    "subcomposition",
    "count_occurrences",
    "count_occurrences_oracle",
    "is_covered",
    "extensions",
    "reductions",
    "compositions_of",
    "compositions_up_to",
]

DEFAULT_SUPPORT_LIMIT = 20


class CompositionError(ValueError):
    """Raised for malformed compositions or composition text."""


class SupportLimitError(ValueError):
    """Raised when exhaustive support enumeration is asked for too long a text."""


class Composition(tuple):
    """An immutable sequence of positive integer parts."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        try:
            parts = tuple(operator.index(part) for part in parts)
        except TypeError as exc:
            raise CompositionError(f"parts must be integers: {exc}") from None
        for part in parts:
            if part < 1:
                raise CompositionError(f"part {part} is not positive")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Composition({', '.join(map(str, self))})"

    def __str__(self) -> str:
        if all(part < 10 for part in self):
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def __add__(self, other):
        return Composition(tuple(self) + tuple(other))

    def __getitem__(self, index):
        item = super().__getitem__(index)
        if isinstance(index, slice):
            return Composition(item)
        return item


def _as_composition(c) -> Composition:
    return c if isinstance(c, Composition) else Composition(c)


_SEPARATOR = re.compile(r"[,\s]+")


def parse_composition(text: str) -> Composition:
    """Parse ``"1,4,4,1"``, ``"1 4 4 1"`` or the compact digit form ``"1441"``.

    The compact form is only recognised when the string contains no
    separators at all; parts of size 10 or more need the separated form.
    """
    stripped = text.strip()
    if not stripped:
        raise CompositionError("empty composition text")
    if _SEPARATOR.search(stripped) is None and len(stripped) > 1:
        for ch in stripped:
            if ch not in "123456789":
                raise CompositionError(
                    f"invalid part {ch!r} in compact form {stripped!r}"
                    " (write parts of 10 or more comma-separated, e.g. '10,')"
                )
        return Composition(int(ch) for ch in stripped)
    parts: list[int] = []
    for token in _SEPARATOR.split(stripped):
        if not token:
            continue
        if not token.isdecimal():
            raise CompositionError(f"invalid part {token!r}")
        value = int(token)
        if value < 1:
            raise CompositionError(f"invalid part {token!r}: parts must be positive")
        parts.append(value)
    if not parts:
        raise CompositionError(f"no parts in {stripped!r}")
    return Composition(parts)


def reverse(c: Sequence[int]) -> Composition:
    return Composition(reversed(tuple(c)))


def longest_prefix_contained(pattern: Sequence[int], text: Sequence[int]) -> int:
    """Length of the longest prefix of `pattern` contained in `text` (greedy)."""
    p = 0
    k = len(pattern)
    for part in text:
        if p == k:
            break
        if part >= pattern[p]:
            p += 1
    return p


def longest_suffix_contained(pattern: Sequence[int], text: Sequence[int]) -> int:
    """Length of the longest suffix of `pattern` contained in `text` (greedy from the right)."""
    return longest_prefix_contained(tuple(reversed(pattern)), tuple(reversed(text)))


def contains(pattern: Sequence[int], text: Sequence[int]) -> bool:
    return longest_prefix_contained(pattern, text) == len(pattern)


def _check_support_limit(text: Sequence[int], limit: int | None) -> None:
    if limit is not None and len(text) > limit:
        raise SupportLimitError(
            f"support enumeration is limited to texts of at most {limit} parts (got {len(text)})"
        )


def supports(
    pattern: Sequence[int],
    text: Sequence[int],
    limit: int | None = DEFAULT_SUPPORT_LIMIT,
) -> set[tuple[int, ...]]:
    """All 1-based index sets of `text` that witness an embedding of `pattern`.

    This is an exhaustive search over ``len(pattern)``-subsets of the text
    indices and is meant as an oracle; texts longer than `limit` parts are
    refused with :class:`SupportLimitError`.
    """
    pattern = _as_composition(pattern)
    if not pattern:
        raise CompositionError("supports of the empty pattern are not defined")
    _check_support_limit(text, limit)
    k = len(pattern)
    found = set()
    for idx in itertools.combinations(range(len(text)), k):
        if all(text[i] >= u for i, u in zip(idx, pattern)):
            found.add(tuple(i + 1 for i in idx))
    return found


def subcomposition(c: Sequence[int], support: Iterable[int]) -> Composition:
    """Parts of `c` at the given 1-based indices, in order."""
    picked = []
    previous = 0
    for i in support:
        if not 1 <= i <= len(c):
            raise IndexError(f"index {i} out of range for a composition with {len(c)} parts")
        if i <= previous:
            raise IndexError("support indices must be strictly increasing")
        previous = i
        picked.append(c[i - 1])
    return Composition(picked)


def count_occurrences(pattern: Sequence[int], text: Sequence[int]) -> int:
    """Number of occurrences of `pattern` in `text`.

    Sums, over every increasing choice of ``len(pattern)`` text indices, the
    product of ``comb(text part, pattern part)``.  Choices that are not
    supports contribute zero and are skipped during the enumeration, as is
    any partial choice that can no longer be completed.
    """
    pattern = tuple(pattern)
    text = tuple(text)
    if not pattern:
        raise CompositionError("occurrences of the empty pattern are not defined")
    k, n = len(pattern), len(text)
    total = 0
    # stack of (next pattern position, first free text index, product so far)
    stack = [(0, 0, 1)]
    while stack:
        j, start, product = stack.pop()
        if j == k:
            total += product
            continue
        need = pattern[j]
        for i in range(start, n - (k - j) + 1):
            if text[i] >= need:
                stack.append((j + 1, i + 1, product * comb(text[i], need)))
    return total


def count_occurrences_oracle(pattern: Sequence[int], text: Sequence[int]) -> int:
    """Occurrence count via the last-part recursion.

    ``Occ(u, v) = Occ(u, v') + comb(v_last, u_last) * Occ(u', v')`` where a
    prime drops the last part, with ``Occ((), v) = 1`` and
    ``Occ(u, ()) = 0`` for non-empty ``u``.
    """
    pattern = tuple(pattern)
    text = tuple(text)
    if not pattern:
        raise CompositionError("occurrences of the empty pattern are not defined")
    # table[j] = Occ(pattern[:j], text[:i]) for the current i
    table = [1] + [0] * len(pattern)
    for part in text:
        for j in range(len(pattern), 0, -1):
            table[j] += comb(part, pattern[j - 1]) * table[j - 1]
    return table[-1]


def is_covered(pattern: Sequence[int], text: Sequence[int]) -> bool:
    """True iff every index of `text` lies in some support of `pattern`.

    Linear time: ``prefix[i]`` is the greedy prefix length of the pattern in
    ``text[:i]`` and ``suffix[i]`` the greedy suffix length in ``text[i:]``.
    Part ``i`` can play pattern position ``j`` exactly when it is large
    enough and both sides can host the rest of the pattern.
    """
    pattern = tuple(pattern)
    text = tuple(text)
    if not pattern:
        raise CompositionError("covering by the empty pattern is not defined")
    k, n = len(pattern), len(text)
    prefix = [0] * (n + 1)
    for i, part in enumerate(text):
        p = prefix[i]
        prefix[i + 1] = p + 1 if p < k and part >= pattern[p] else p
    suffix = [0] * (n + 2)
    for i in range(n - 1, -1, -1):
        s = suffix[i + 1]
        suffix[i] = s + 1 if s < k and text[i] >= pattern[k - 1 - s] else s
    for i, part in enumerate(text):
        before, after = prefix[i], suffix[i + 1]
        # positions j (0-based) with j <= before and k - 1 - j <= after
        lo = max(0, k - 1 - after)
        hi = min(before, k - 1)
        if not any(pattern[j] <= part for j in range(lo, hi + 1)):
            return False
    return True


def extensions(c: Sequence[int]) -> set[Composition]:
    """Compositions one cell larger: one part incremented or a new part 1 inserted."""
    c = tuple(c)
    result = set()
    for i in range(len(c)):
        result.add(Composition(c[:i] + (c[i] + 1,) + c[i + 1:]))
    for i in range(len(c) + 1):
        result.add(Composition(c[:i] + (1,) + c[i:]))
    return result


def reductions(c: Sequence[int]) -> set[Composition]:
    """Compositions one cell smaller: one part decremented, dropped when it hits zero."""
    c = tuple(c)
    result = set()
    for i, part in enumerate(c):
        if part == 1:
            result.add(Composition(c[:i] + c[i + 1:]))
        else:
            result.add(Composition(c[:i] + (part - 1,) + c[i + 1:]))
    return result


@lru_cache(maxsize=64)
def _compositions_of(n: int) -> tuple[Composition, ...]:
    if n == 0:
        return (Composition(),)
    out = []
    for first in range(1, n + 1):
        for rest in _compositions_of(n - first):
            out.append(Composition((first,) + rest))
    return tuple(out)


def compositions_of(n: int) -> tuple[Composition, ...]:
    """All compositions of `n`, lexicographically ordered."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _compositions_of(n)


def compositions_up_to(max_size: int, min_size: int = 1) -> list[Composition]:
    """All compositions with ``min_size <= size <= max_size``."""
    out = []
    for n in range(min_size, max_size + 1):
        out.extend(compositions_of(n))
    return out
