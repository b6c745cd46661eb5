"""Automata recognising the prolific texts of a pattern.

States are pairs ``(prefix_len, suffix_len)`` as produced by
:func:`prolific.prolificity.step`.  The alphabet is the list of *critical
intervals* of the pattern: maximal integer ranges on which every comparison
against a pattern value comes out the same, so one representative value per
interval determines each transition.

    >>> a = build_automaton((1, 4, 4, 1))
    >>> [str(i) for i in a.alphabet]
    ['[1,3]', '[4,inf]']
    >>> a.accepts((1, 4, 4, 4, 1)), a.accepts((1, 4, 4, 1))
    (True, False)
"""

from __future__ import annotations

import bisect
import json
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .compositions import Composition, CompositionError
from .prolificity import has_ones_at_ends, step

__all__ = [
    "Interval",
    "ProlificAutomaton",
    "critical_intervals",
    "interval_index",
    "standardize",
    "build_automaton",
    "accepts",
    "isomorphic_modulo_standardisation",
    "to_dot",
    "to_dict",
    "to_json",
]

State = tuple[int, int]


@dataclass(frozen=True)
class Interval:
    """Integer interval ``[lo, hi]``; ``hi is None`` means unbounded."""

    lo: int
    hi: int | None = None

    def __post_init__(self):
        if self.lo < 1:
            raise ValueError(f"interval lower end {self.lo} is not positive")
        if self.hi is not None and self.hi < self.lo:
            raise ValueError(f"empty interval [{self.lo},{self.hi}]")

    def __contains__(self, value: int) -> bool:
        return value >= self.lo and (self.hi is None or value <= self.hi)

    @property
    def bounded(self) -> bool:
        return self.hi is not None

    def __str__(self) -> str:
        return f"[{self.lo},{'inf' if self.hi is None else self.hi}]"

    def as_pair(self) -> list:
        return [self.lo, self.hi]


def critical_intervals(pattern: Sequence[int]) -> list[Interval]:
    """Partition of ``[1, inf)`` cut at every distinct part value of `pattern`.

    >>> [str(i) for i in critical_intervals((3, 7, 3, 4, 9, 9))]
    ['[1,2]', '[3,3]', '[4,6]', '[7,8]', '[9,inf]']
    """
    if not pattern:
        raise CompositionError("critical intervals of the empty pattern are not defined")
    cuts = sorted(set(pattern) | {1})
    intervals = [Interval(a, b - 1) for a, b in zip(cuts, cuts[1:])]
    intervals.append(Interval(cuts[-1], None))
    return intervals


def interval_index(intervals: Sequence[Interval], value: int) -> int:
    """0-based index of the interval containing `value`."""
    if value < 1:
        raise ValueError(f"value {value} is not positive")
    return bisect.bisect_right([i.lo for i in intervals], value) - 1


def standardize(pattern: Sequence[int], w: Sequence[int]) -> Composition:
    """Replace each part of `w` by the 1-based ordinal of its critical interval."""
    intervals = critical_intervals(pattern)
    los = [i.lo for i in intervals]
    return Composition(bisect.bisect_right(los, part) for part in w)


@dataclass(frozen=True)
class ProlificAutomaton:
    pattern: Composition
    alphabet: tuple[Interval, ...]
    states: tuple[State, ...]
    initial: State
    transitions: dict = field(repr=False)  # (state, interval index) -> state
    empty_language: bool = False

    def is_accepting(self, state: State) -> bool:
        return not self.empty_language and state[1] == 0

    @property
    def accepting(self) -> tuple[State, ...]:
        return tuple(s for s in self.states if self.is_accepting(s))

    def delta(self, state: State, value: int) -> State:
        return self.transitions[state, interval_index(self.alphabet, value)]

    def run(self, text: Sequence[int]) -> State:
        state = self.initial
        for part in text:
            state = self.delta(state, part)
        return state

    def accepts(self, text: Sequence[int]) -> bool:
        return self.is_accepting(self.run(text))


def build_automaton(pattern: Sequence[int]) -> ProlificAutomaton:
    """Breadth-first construction of the reachable part of the automaton.

    For patterns not starting and ending with 1 the result is a one-state,
    non-accepting automaton flagged ``empty_language``.  Each transition is
    computed from the interval's lower end and re-checked at its upper end
    (or at ``lo + max(pattern)`` for the unbounded interval).
    """
    pattern = Composition(pattern)
    if not pattern:
        raise CompositionError("cannot build an automaton for the empty pattern")
    alphabet = tuple(critical_intervals(pattern))
    k = len(pattern)
    if not has_ones_at_ends(pattern):
        initial = (0, k)
        transitions = {(initial, a): initial for a in range(len(alphabet))}
        return ProlificAutomaton(pattern, alphabet, (initial,), initial, transitions, True)

    initial = (0, k)
    seen = {initial}
    order = [initial]
    queue = deque([initial])
    transitions = {}
    top = max(pattern)
    while queue:
        state = queue.popleft()
        for a, interval in enumerate(alphabet):
            target = step(pattern, state, interval.lo)
            probe = interval.hi if interval.bounded else interval.lo + top
            if step(pattern, state, probe) != target:
                raise AssertionError(
                    f"transition from {state} is not constant on {interval} for {pattern!r}"
                )
            transitions[state, a] = target
            if target not in seen:
                seen.add(target)
                order.append(target)
                queue.append(target)
    return ProlificAutomaton(pattern, alphabet, tuple(order), initial, transitions)


def accepts(a: ProlificAutomaton, text: Sequence[int]) -> bool:
    return a.accepts(text)


def isomorphic_modulo_standardisation(pattern: Sequence[int]) -> bool:
    """Compare the automaton of `pattern` with that of its own standardisation.

    Intervals are matched by ordinal; states, initial state, accepting states
    and the whole transition table must coincide.
    """
    pattern = Composition(pattern)
    original = build_automaton(pattern)
    standard = build_automaton(standardize(pattern, pattern))
    return (
        len(original.alphabet) == len(standard.alphabet)
        and set(original.states) == set(standard.states)
        and original.initial == standard.initial
        and set(original.accepting) == set(standard.accepting)
        and original.transitions == standard.transitions
        and original.empty_language == standard.empty_language
    )


def _state_name(state: State) -> str:
    return f"({state[0]},{state[1]})"


def to_dot(a: ProlificAutomaton, name: str = "prolific") -> str:
    """Graphviz source, one edge per (state, interval), in a stable order."""
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for state in sorted(a.states):
        shape = "doublecircle" if a.is_accepting(state) else "circle"
        lines.append(f'  "{_state_name(state)}" [shape={shape}];')
    lines.append(f'  __start -> "{_state_name(a.initial)}";')
    for state in sorted(a.states):
        for idx, interval in enumerate(a.alphabet):
            target = a.transitions[state, idx]
            lines.append(
                f'  "{_state_name(state)}" -> "{_state_name(target)}" [label="{interval}"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dict(a: ProlificAutomaton) -> dict:
    states = sorted(a.states)
    index = {s: i for i, s in enumerate(states)}
    transitions = [
        [index[s], idx, index[a.transitions[s, idx]]]
        for s in states
        for idx in range(len(a.alphabet))
    ]
    return {
        "pattern": list(a.pattern),
        "intervals": [i.as_pair() for i in a.alphabet],
        "states": [list(s) for s in states],
        "initial": list(a.initial),
        "accepting": [list(s) for s in states if a.is_accepting(s)],
        "transitions": transitions,
        "empty_language": a.empty_language,
    }


def to_json(a: ProlificAutomaton) -> str:
    return json.dumps(to_dict(a))
