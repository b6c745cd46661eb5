import pytest

from prolific.automaton import build_automaton
from prolific.compositions import (
    Composition,
    CompositionError,
    compositions_up_to,
    contains,
    reductions,
    reverse,
)
from prolific.minimal import (
    RoundCapExceeded,
    canonical_key,
    exclude,
    exclusion_matcher,
    has_one_between_large_parts,
    is_self_prolific,
    m_pattern,
    minconst_formula,
    minimal_prolific,
    minimal_prolific_oracle,
    prune_automaton,
    shortest_accepted,
)
from prolific.prolificity import is_prolific

from conftest import small_valid_patterns


def labelled_edges(g):
    return sorted((src[0], label, dst[0]) for src, label, dst in g.edge_list())


def test_prune_1221_matches_figure():
    g = prune_automaton(build_automaton((1, 2, 2, 1)))
    assert labelled_edges(g) == [
        ((0, 4), 1, (1, 3)),
        ((1, 3), 2, (2, 3)),
        ((2, 3), 2, (3, 2)),
        ((3, 2), 1, (4, 2)),
        ((3, 2), 2, (4, 1)),
        ((4, 1), 1, (4, 0)),
        ((4, 2), 2, (4, 1)),
    ]
    assert {n[0] for n in g.accepting} == {(4, 0)}


def test_prune_small_cases():
    g = prune_automaton(build_automaton((1, 1)))
    assert labelled_edges(g) == [((0, 2), 1, (1, 1)), ((1, 1), 1, (2, 0))]
    empty = prune_automaton(build_automaton((2, 1)))
    assert empty.is_empty() and empty.edge_list() == [] and shortest_accepted(empty) is None


def test_pruned_graph_invariants():
    for u in small_valid_patterns(8):
        a = build_automaton(u)
        g = prune_automaton(a)
        los = {i.lo for i in a.alphabet}
        for src, label, dst in g.edge_list():
            assert label in los and src != dst
            assert dst[0][0] >= src[0][0]
        for node in g.accepting:
            assert g.edges[node] == []
        assert g.to_dict()["initial"] is not None


def test_shortest_accepted_examples():
    w = shortest_accepted(prune_automaton(build_automaton((1, 2, 2, 1))))
    assert w == (1, 2, 2, 2, 1) and w.size == 8
    w = shortest_accepted(prune_automaton(build_automaton((1, 4, 4, 1))))
    assert w == (1, 4, 4, 4, 1) and w.size == 14


def test_pruned_graph_accepts_only_prolific_words():
    for u in small_valid_patterns(6):
        g = prune_automaton(build_automaton(u))
        for v in compositions_up_to(10):
            if g.accepts(v):
                assert is_prolific(u, v)


def test_exclusion_matcher():
    assert exclusion_matcher((1, 2)).contains((1, 1, 3))
    assert not exclusion_matcher((2, 2)).contains((2, 1, 1))
    with pytest.raises(CompositionError):
        exclusion_matcher(())
    for v in compositions_up_to(4):
        m = exclusion_matcher(v)
        for w in compositions_up_to(9):
            assert m.contains(w) == contains(v, w)


def test_exclude():
    g = prune_automaton(build_automaton((1, 2, 2, 1)))
    assert shortest_accepted(exclude(g, (1, 2, 2, 2, 1))) is None

    g = prune_automaton(build_automaton(m_pattern(1)))
    words = []
    while (w := shortest_accepted(g)) is not None:
        words.append(w)
        g = exclude(g, w)
    assert len(words) == 2


def test_exclude_is_a_restriction():
    u = m_pattern(2)
    g = prune_automaton(build_automaton(u))
    first = shortest_accepted(g)
    h = exclude(g, first)
    for v in compositions_up_to(13):
        if h.accepts(v):
            assert g.accepts(v) and not contains(first, v)


@pytest.mark.parametrize(
    "u, expected",
    [
        ((1, 4, 4, 1), [(1, 4, 4, 4, 1)]),
        ((1, 2, 2, 1), [(1, 2, 2, 2, 1)]),
        ((1, 2, 1), [(1, 2, 1)]),
        ((1, 1, 4, 4, 1), [(1, 1, 4, 4, 4, 1)]),
        ((1, 1), [(1, 1)]),
        ((2, 1), []),
    ],
)
def test_minimal_examples(u, expected):
    result = minimal_prolific(u)
    assert list(result.elements) == expected
    assert result.pattern == u


def test_m2_has_three():
    result = minimal_prolific(m_pattern(2))
    assert len(result) == 3
    assert result.iterations == 4


def test_m1_elements_match_brute_force():
    result = minimal_prolific(m_pattern(1))
    assert [str(e) for e in result] == ["12222221", "122121221"]
    assert minimal_prolific_oracle(m_pattern(1), 15) == list(result.elements)


def test_round_cap():
    with pytest.raises(RoundCapExceeded) as info:
        minimal_prolific(m_pattern(3), round_cap=2)
    assert len(info.value.partial) == 2 and "1222112221" in str(info.value)
    with pytest.raises(ValueError):
        minimal_prolific((1, 1), round_cap=0)


def test_minimal_set_invariants():
    for u in small_valid_patterns(8):
        result = minimal_prolific(u)
        elems = list(result.elements)
        assert elems == sorted(elems, key=canonical_key)
        for a in elems:
            assert is_prolific(u, a)
            assert not any(r and is_prolific(u, r) for r in reductions(a))
            for b in elems:
                assert a == b or not contains(a, b)


def test_oracle_examples():
    assert minimal_prolific_oracle((1, 1), 6) == [(1, 1)]
    assert minimal_prolific_oracle((1, 2, 2, 1), 10) == [(1, 2, 2, 2, 1)]
    assert minimal_prolific_oracle((2, 1), 8) == []


def test_minconst_formula():
    assert minconst_formula((1, 4, 4, 1)) == (1, 4, 4, 4, 1)
    assert minconst_formula((1, 2, 3, 1)) == (1, 2, 3, 3, 1)
    assert minconst_formula((1, 3, 2, 1)) == (1, 3, 3, 2, 1)
    assert minconst_formula((1, 5, 1)) == (1, 5, 1)
    for bad in [(1, 1), (1, 2, 1, 2, 1), (2, 2), (1, 2)]:
        with pytest.raises(CompositionError):
            minconst_formula(bad)


def test_self_prolific():
    assert is_self_prolific((1, 2, 1))
    assert not is_self_prolific((1, 2, 2, 1))
    assert is_self_prolific((1, 1, 1))
    for u in small_valid_patterns(9):
        assert is_self_prolific(u) == has_one_between_large_parts(u)
        if is_self_prolific(u):
            assert list(minimal_prolific(u).elements) == [u]


def test_reverse_symmetry_of_minimal_sets():
    for u in compositions_up_to(8):
        forward = {tuple(reverse(m)) for m in minimal_prolific(u)}
        assert forward == {tuple(m) for m in minimal_prolific(reverse(u))}


def test_determinism():
    assert minimal_prolific(m_pattern(4)) == minimal_prolific(m_pattern(4))


def test_as_dict():
    d = minimal_prolific((1, 4, 4, 1)).as_dict()
    assert d == {"pattern": [1, 4, 4, 1], "minimal": [[1, 4, 4, 4, 1]], "count": 1, "rounds": 2}


def test_m_pattern():
    assert m_pattern(0) == (1, 2, 2, 2, 2, 1)
    assert m_pattern(2) == (1, 2, 2, 1, 1, 2, 2, 1)
    assert minimal_prolific(m_pattern(0)).elements == (Composition((1, 2, 2, 2, 2, 2, 2, 2, 1)),)
