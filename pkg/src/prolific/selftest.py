"""Bounded exhaustive agreement checks between fast routines and oracles.

Each suite walks its inputs smallest first, so the first counterexample it
reports is a minimal one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .automaton import build_automaton
from .compositions import (
    compositions_up_to,
    contains,
    count_occurrences,
    count_occurrences_oracle,
    extensions,
    is_covered,
    longest_prefix_contained,
    reductions,
    supports,
)
from .minimal import minimal_prolific, minimal_prolific_oracle
from .prolificity import (
    has_ones_at_ends,
    is_prolific,
    is_prolific_by_corollary,
    is_prolific_oracle,
)


@dataclass
class SuiteResult:
    name: str
    checked: int
    counterexample: tuple | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def as_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": None if self.passed else list(self.counterexample),
        }


def _exhaustive_prefix(u, v) -> int:
    best = 0
    for p in range(1, len(u) + 1):
        if any(all(v[i] >= x for i, x in zip(idx, u)) for idx in itertools.combinations(range(len(v)), p)):
            best = p
        else:
            break
    return best


def suite_containment(pattern_max, text_max):
    checked = 0
    for u in compositions_up_to(pattern_max):
        for v in compositions_up_to(text_max, 0):
            checked += 1
            if contains(u, v) != bool(supports(u, v)) or longest_prefix_contained(u, v) != _exhaustive_prefix(u, v):
                return checked, (u, v, "contains/longest prefix differ from exhaustive search")
    return checked, None


def suite_counting(pattern_max, text_max):
    checked = 0
    for u in compositions_up_to(pattern_max):
        for v in compositions_up_to(text_max, 0):
            checked += 1
            base = count_occurrences(u, v)
            if base != count_occurrences_oracle(u, v):
                return checked, (u, v, "direct sum and recursion disagree")
            if any(count_occurrences(u, e) < base for e in extensions(v)):
                return checked, (u, v, "an extension lost occurrences")
    return checked, None


def suite_covering(pattern_max, text_max):
    checked = 0
    for u in compositions_up_to(pattern_max):
        for v in compositions_up_to(text_max):
            checked += 1
            union = set().union(*supports(u, v))
            if is_covered(u, v) != (union == set(range(1, len(v) + 1))):
                return checked, (u, v, "covering differs from support union")
    return checked, None


def suite_duality(pattern_max, text_max):
    checked = 0
    for c in compositions_up_to(text_max, 0):
        for w in reductions(c):
            checked += 1
            if c not in extensions(w):
                return checked, (w, c, "reduction is not undone by an extension")
        for e in extensions(c):
            checked += 1
            if c not in reductions(e):
                return checked, (c, e, "extension is not undone by a reduction")
    return checked, None


def suite_prolific(pattern_max, text_max):
    checked = 0
    texts = compositions_up_to(text_max)
    for u in compositions_up_to(pattern_max):
        valid = has_ones_at_ends(u)
        a = build_automaton(u)
        for v in texts:
            checked += 1
            oracle = is_prolific_oracle(u, v)
            if not valid:
                if oracle:
                    return checked, (u, v, "prolific text for a pattern not bounded by 1s")
                continue
            answers = (is_prolific(u, v), oracle, is_prolific_by_corollary(u, v), a.accepts(v))
            if len(set(answers)) != 1:
                return checked, (u, v, f"trace/oracle/corollary/automaton = {answers}")
    return checked, None


def suite_minimal(pattern_max, text_max):
    checked = 0
    for u in compositions_up_to(pattern_max):
        checked += 1
        found = minimal_prolific(u)
        top = max((e.size for e in found), default=sum(u))
        if list(found.elements) != minimal_prolific_oracle(u, top + 2):
            return checked, (u, tuple(found.elements), "automaton search differs from brute force")
        for v in compositions_up_to(top + 2):
            if is_prolific(u, v) and not any(contains(m, v) for m in found):
                return checked, (u, v, "prolific text above no returned minimal element")
    return checked, None


SUITES: dict[str, Callable] = {
    "containment": suite_containment,
    "counting": suite_counting,
    "covering": suite_covering,
    "duality": suite_duality,
    "prolific": suite_prolific,
    "minimal": suite_minimal,
}


def run_suites(pattern_max: int = 6, text_max: int = 9, names=None) -> list[SuiteResult]:
    results = []
    for name in names or SUITES:
        checked, counterexample = SUITES[name](pattern_max, text_max)
        results.append(SuiteResult(name, checked, counterexample))
    return results
