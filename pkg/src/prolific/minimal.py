"""Minimal prolific compositions of a pattern.

The prolific texts of a pattern form an upward closed set, so they are
described by the finite antichain of their minimal elements.  That
antichain is found by repeated cheapest-word search:

1. :func:`prune_automaton` removes self-loops and keeps, for each pair of
   distinct states, only the smallest value causing that transition.  Every
   minimal prolific composition survives as a path, and the total of the
   labels along a path is the size of the word it spells.
2. :func:`shortest_accepted` returns a minimum-size accepted word.
3. :func:`exclude` intersects the graph with "does not contain that word"
   and the search repeats until nothing is accepted.

A minimum-size word of the remaining language is always minimal: any
minimal composition below it avoids every word found so far, so it is
still accepted and cannot be lighter.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .automaton import ProlificAutomaton, build_automaton
from .compositions import (
    Composition,
    CompositionError,
    compositions_up_to,
    count_occurrences,
    reductions,
)
from .prolificity import is_prolific, is_prolific_oracle

__all__ = [
    "SearchGraph",
    "MinimalSet",
    "RoundCapExceeded",
    "DEFAULT_ROUND_CAP",
    "canonical_key",
    "prune_automaton",
    "shortest_accepted",
    "exclusion_matcher",
    "ExclusionMatcher",
    "exclude",
    "minimal_prolific",
    "minimal_prolific_oracle",
    "minconst_formula",
    "has_one_between_large_parts",
    "is_self_prolific",
    "m_pattern",
]

DEFAULT_ROUND_CAP = 512


class RoundCapExceeded(RuntimeError):
    """The exclusion loop ran for more rounds than allowed."""

    def __init__(self, pattern, partial, cap):
        self.pattern = pattern
        self.partial = partial
        self.cap = cap
        found = ", ".join(map(str, partial))
        super().__init__(
            f"minimal set search for {pattern} exceeded {cap} rounds; found so far: {{{found}}}"
        )


def canonical_key(c: Sequence[int]):
    """Sort key: size, then number of parts, then lexicographic."""
    return (sum(c), len(c), tuple(c))


@dataclass(frozen=True)
class SearchGraph:
    """Weighted DAG whose accepted paths spell candidate compositions.

    Nodes are ``(automaton state, matcher states)`` pairs; `edges` maps a
    node to ``(label, target)`` pairs and the weight of an edge is its label.
    """

    pattern: Composition
    initial: Hashable | None
    accepting: frozenset
    edges: dict = field(repr=False)

    @property
    def nodes(self) -> list:
        return list(self.edges)

    def is_empty(self) -> bool:
        return not self.accepting

    def edge_list(self) -> list[tuple]:
        return [(src, label, dst) for src, out in self.edges.items() for label, dst in out]

    def to_dict(self) -> dict:
        nodes = sorted(self.edges)
        index = {n: i for i, n in enumerate(nodes)}
        return {
            "pattern": list(self.pattern),
            "nodes": [[list(state), list(marks)] for state, marks in nodes],
            "initial": None if self.initial is None else index[self.initial],
            "accepting": sorted(index[n] for n in self.accepting),
            "edges": sorted([index[a], label, index[b]] for a, label, b in self.edge_list()),
        }

    def accepts(self, word: Sequence[int]) -> bool:
        node = self.initial
        if node is None:
            return False
        for part in word:
            for label, target in self.edges.get(node, ()):
                if label == part:
                    node = target
                    break
            else:
                return False
        return node in self.accepting


def _trim(pattern, initial, accepting, edges) -> SearchGraph:
    """Keep only nodes reachable from `initial` that can reach acceptance."""
    reverse: dict = {n: [] for n in edges}
    for src, out in edges.items():
        for _, dst in out:
            reverse.setdefault(dst, []).append(src)
    live = set(accepting)
    stack = list(accepting)
    while stack:
        node = stack.pop()
        for src in reverse.get(node, ()):
            if src not in live:
                live.add(src)
                stack.append(src)
    if initial not in live:
        return SearchGraph(pattern, None, frozenset(), {})
    kept = {
        src: [(label, dst) for label, dst in out if dst in live]
        for src, out in edges.items()
        if src in live
    }
    return SearchGraph(pattern, initial, frozenset(accepting) & live, kept)


def prune_automaton(a: ProlificAutomaton) -> SearchGraph:
    """Drop self-loops and label each remaining transition by its smallest value.

    When several intervals lead from one state to the same target only the
    smallest label is kept: a larger value would give a word containing a
    smaller accepted one.
    """
    if a.empty_language:
        return SearchGraph(a.pattern, None, frozenset(), {})
    edges: dict = {}
    for state in a.states:
        best: dict = {}
        for idx, interval in enumerate(a.alphabet):
            target = a.transitions[state, idx]
            if target != state and (target not in best or interval.lo < best[target]):
                best[target] = interval.lo
        node = (state, ())
        edges[node] = sorted((label, (target, ())) for target, label in best.items())
    accepting = [(s, ()) for s in a.accepting]
    return _trim(a.pattern, (a.initial, ()), accepting, edges)


def shortest_accepted(g: SearchGraph) -> Composition | None:
    """Cheapest accepted word; ties go to fewer parts, then the smaller word."""
    if g.initial is None:
        return None
    counter = itertools.count()
    heap = [(0, 0, (), next(counter), g.initial)]
    done = set()
    while heap:
        weight, length, word, _, node = heapq.heappop(heap)
        if node in done:
            continue
        done.add(node)
        if node in g.accepting:
            return Composition(word)
        for label, target in g.edges.get(node, ()):
            if target not in done:
                heapq.heappush(
                    heap, (weight + label, length + 1, word + (label,), next(counter), target)
                )
    return None


class ExclusionMatcher:
    """Greedy prefix tracker for one forbidden composition.

    State ``j`` means ``v[:j]`` has been found; state ``len(v)`` is absorbing.
    """

    def __init__(self, v: Sequence[int]):
        v = Composition(v)
        if not v:
            raise CompositionError("cannot exclude the empty composition")
        self.v = v
        self.contained_state = len(v)

    def step(self, j: int, part: int) -> int:
        if j < len(self.v) and part >= self.v[j]:
            return j + 1
        return j

    def run(self, word: Iterable[int]) -> int:
        j = 0
        for part in word:
            j = self.step(j, part)
        return j

    def contains(self, word: Iterable[int]) -> bool:
        return self.run(word) == self.contained_state


def exclusion_matcher(v: Sequence[int]) -> ExclusionMatcher:
    return ExclusionMatcher(v)


def exclude(g: SearchGraph, v: Sequence[int]) -> SearchGraph:
    """Restrict `g` to the words that do not contain `v`."""
    matcher = ExclusionMatcher(v)
    if g.initial is None:
        return g
    start = (g.initial[0], g.initial[1] + (0,))
    edges: dict = {}
    accepting = []
    stack = [start]
    seen = {start}
    while stack:
        node = stack.pop()
        state, marks = node
        inner = (state, marks[:-1])
        j = marks[-1]
        if inner in g.accepting:
            accepting.append(node)
        out = []
        for label, (t_state, t_marks) in g.edges.get(inner, ()):
            nj = matcher.step(j, label)
            if nj == matcher.contained_state:
                continue
            target = (t_state, t_marks + (nj,))
            out.append((label, target))
            if target not in seen:
                seen.add(target)
                stack.append(target)
        edges[node] = out
    return _trim(g.pattern, start, accepting, edges)


@dataclass(frozen=True)
class MinimalSet:
    pattern: Composition
    elements: tuple[Composition, ...]
    iterations: int

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, item) -> bool:
        return tuple(item) in {tuple(e) for e in self.elements}

    def as_dict(self) -> dict:
        return {
            "pattern": list(self.pattern),
            "minimal": [list(e) for e in self.elements],
            "count": len(self.elements),
            "rounds": self.iterations,
        }


def minimal_prolific(pattern: Sequence[int], round_cap: int = DEFAULT_ROUND_CAP) -> MinimalSet:
    """All minimal prolific compositions of `pattern`, canonically ordered.

    ``iterations`` counts the cheapest-word searches, including the last,
    unsuccessful one.  Raises :class:`RoundCapExceeded` if more than
    `round_cap` words would be needed.
    """
    pattern = Composition(pattern)
    if not pattern:
        raise CompositionError("the pattern must be non-empty")
    if round_cap < 1:
        raise ValueError("round_cap must be at least 1")
    graph = prune_automaton(build_automaton(pattern))
    found: list[Composition] = []
    rounds = 0
    while True:
        rounds += 1
        word = shortest_accepted(graph)
        if word is None:
            break
        if len(found) >= round_cap:
            raise RoundCapExceeded(pattern, sorted(found, key=canonical_key), round_cap)
        found.append(word)
        graph = exclude(graph, word)
    return MinimalSet(pattern, tuple(sorted(found, key=canonical_key)), rounds)


def minimal_prolific_oracle(pattern: Sequence[int], max_size: int, counter=count_occurrences) -> list[Composition]:
    """Minimal prolific compositions of size at most `max_size`, by brute force.

    Every composition up to `max_size` is tested with the definitional
    check; a prolific one is minimal when none of its one-cell reductions is
    prolific, which suffices because prolific texts are upward closed.
    """
    pattern = Composition(pattern)
    if not pattern:
        raise CompositionError("the pattern must be non-empty")
    prolific = {c for c in compositions_up_to(max_size) if is_prolific_oracle(pattern, c, counter)}
    minimal = [c for c in prolific if not any(r in prolific for r in reductions(c))]
    return sorted(minimal, key=canonical_key)


def minconst_formula(pattern: Sequence[int]) -> Composition:
    """Unique minimal prolific composition of ``1 e_1 ... e_k 1`` with all ``e_i > 1``.

    The answer is ``1 e_1 ... e_{k-1} max(e_k, e_1) e_2 ... e_k 1``.
    """
    pattern = Composition(pattern)
    e = pattern[1:-1]
    if len(pattern) < 3 or pattern[0] != 1 or pattern[-1] != 1 or any(x == 1 for x in e):
        raise CompositionError(
            f"{pattern} is not of the form 1 e_1 ... e_k 1 with k >= 1 and every e_i > 1"
        )
    return Composition((1,) + e[:-1] + (max(e[-1], e[0]),) + e[1:] + (1,))


def has_one_between_large_parts(pattern: Sequence[int]) -> bool:
    """True iff no two parts larger than 1 are adjacent."""
    return all(a == 1 or b == 1 for a, b in zip(pattern, pattern[1:]))


def is_self_prolific(pattern: Sequence[int]) -> bool:
    if not pattern:
        raise CompositionError("the pattern must be non-empty")
    return is_prolific(pattern, pattern)


def m_pattern(k: int) -> Composition:
    """``1 2 2`` then `k` ones then ``2 2 1``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return Composition((1, 2, 2) + (1,) * k + (2, 2, 1))

