"""Prolific integer compositions.

A composition ``v`` is *prolific* for a pattern ``u`` when every way of
adding one cell to ``v`` strictly increases the number of occurrences of
``u``.  This package decides, counts and explains prolificity, builds the
automaton recognising prolific texts, and enumerates minimal prolific
compositions.
"""

from .automaton import (
    Interval,
    ProlificAutomaton,
    accepts,
    build_automaton,
    critical_intervals,
    isomorphic_modulo_standardisation,
    standardize,
    to_dot,
    to_json,
)
from .compositions import (
    Composition,
    CompositionError,
    SupportLimitError,
    contains,
    count_occurrences,
    count_occurrences_oracle,
    extensions,
    is_covered,
    longest_prefix_contained,
    parse_composition,
    reductions,
    reverse,
    subcomposition,
    supports,
)
from .minimal import (
    MinimalSet,
    RoundCapExceeded,
    SearchGraph,
    exclude,
    exclusion_matcher,
    is_self_prolific,
    m_pattern,
    minconst_formula,
    minimal_prolific,
    minimal_prolific_oracle,
    prune_automaton,
    shortest_accepted,
)
from .prolificity import (
    TraceEntry,
    is_prolific,
    is_prolific_by_corollary,
    is_prolific_oracle,
    local_requirement,
    suffix_trace,
)

__version__ = "0.1.0"
