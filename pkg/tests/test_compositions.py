import itertools
from math import comb

import pytest
from hypothesis import given

from prolific.compositions import (
    Composition,
    CompositionError,
    SupportLimitError,
    compositions_of,
    compositions_up_to,
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

from conftest import compositions


def cell_embeddings(u, v):
    """Count occurrences straight from the cell picture.

    Cells of `v` are labelled by the part they sit in; a choice of |u| cells
    is an occurrence when consecutive runs of u-cells land in one v-part and
    distinct u-parts land in distinct v-parts.
    """
    cells = [i for i, part in enumerate(v) for _ in range(part)]
    owner = [j for j, part in enumerate(u) for _ in range(part)]
    total = 0
    for chosen in itertools.combinations(cells, len(owner)):
        ok = True
        for a in range(1, len(owner)):
            same_u = owner[a] == owner[a - 1]
            same_v = chosen[a] == chosen[a - 1]
            if same_u != same_v:
                ok = False
                break
        total += ok
    return total


def union_of_supports(u, v):
    return set().union(*supports(u, v)) if v else set()


@pytest.mark.parametrize(
    "text, parts",
    [
        ("1,4,4,1", (1, 4, 4, 1)),
        ("1441", (1, 4, 4, 1)),
        ("3,7,3,4,9,9", (3, 7, 3, 4, 9, 9)),
        ("1 4  4\t1", (1, 4, 4, 1)),
        ("8,12,4", (8, 12, 4)),
        ("12", (1, 2)),
        ("7", (7,)),
        ("10,", (10,)),
    ],
)
def test_parse(text, parts):
    assert parse_composition(text) == parts


@pytest.mark.parametrize("text, token", [("", ""), ("1,0,1", "0"), ("1,-2", "-2"), ("1,a", "a"), ("102", "0")])
def test_parse_errors_name_the_token(text, token):
    with pytest.raises(CompositionError) as info:
        parse_composition(text)
    assert token in str(info.value)


def test_composition_value_semantics():
    c = Composition((1, 3, 2))
    assert c.size == 6 and len(c) == 3
    assert c == (1, 3, 2) and hash(c) == hash((1, 3, 2))
    assert isinstance(c[1:], Composition)
    assert str(Composition((1, 12))) == "1,12"
    with pytest.raises(CompositionError):
        Composition((1, 0))


@given(compositions())
def test_size_at_least_length(c):
    assert c.size >= len(c)
    assert (c.size == len(c)) == all(p == 1 for p in c)


def test_reverse():
    assert reverse((1, 3, 2, 4, 2, 1, 1)) == (1, 1, 2, 4, 2, 3, 1)
    assert reverse(()) == ()
    assert reverse((1, 2, 1)) == (1, 2, 1)


@given(compositions())
def test_reverse_is_an_involution(c):
    assert reverse(reverse(c)) == c


def test_contains_examples():
    assert contains((1, 2, 2, 3, 2, 1), (1, 3, 2, 2, 4, 2, 1, 1))
    assert not contains((2,), (1, 1, 1))
    assert contains((1, 4, 4, 1), (1, 4, 4, 4, 1))
    assert contains((), (3,))


def test_longest_prefix_examples():
    u = (1, 2, 1, 3, 2, 2, 1)
    assert longest_prefix_contained(u, (1, 5, 5)) == 3
    assert longest_prefix_contained(u, (1, 5, 5, 1, 2, 4)) == 4
    assert longest_prefix_contained(u, ()) == 0


def test_supports_examples():
    assert len(supports((1, 2, 2, 3, 2, 1), (1, 3, 2, 2, 4, 2, 1, 1))) == 8
    assert supports((1, 1), (1, 1)) == {(1, 2)}
    assert supports((2,), (1, 3, 1)) == {(2,)}
    assert (1, 2, 4, 5, 6, 8) in supports((1, 2, 2, 3, 2, 1), (1, 3, 2, 2, 4, 2, 1, 1))


def test_supports_limit():
    with pytest.raises(SupportLimitError):
        supports((1,), (1,) * 21)
    assert len(supports((1,), (1,) * 21, limit=None)) == 21
    with pytest.raises(CompositionError):
        supports((), (1,))


def test_subcomposition():
    assert subcomposition((1, 3, 2, 2, 4, 2, 1, 1), (1, 2, 4, 5, 6, 8)) == (1, 3, 2, 4, 2, 1)
    assert subcomposition((5,), (1,)) == (5,)
    assert subcomposition((2, 3, 4), ()) == ()
    with pytest.raises(IndexError):
        subcomposition((2, 3), (3,))


def test_count_examples():
    assert count_occurrences((1, 1), (1, 1)) == 1
    assert count_occurrences((1,), (3, 2)) == comb(3, 1) + comb(2, 1) == 5
    assert count_occurrences((1, 2, 2, 3, 2, 1), (1, 3, 2, 2, 4, 2, 1, 1)) == 80
    assert count_occurrences_oracle((1, 1), (2, 2)) == 4
    assert count_occurrences_oracle((2,), (1,)) == 0


def test_count_against_cell_picture():
    # 80 is also what a direct enumeration of cell choices gives
    assert cell_embeddings((1, 2, 2, 3, 2, 1), (1, 3, 2, 2, 4, 2, 1, 1)) == 80
    for u in compositions_up_to(4):
        for v in compositions_up_to(6):
            assert count_occurrences(u, v) == cell_embeddings(u, v), (u, v)


def test_count_is_exact_for_big_parts():
    assert count_occurrences((3, 3), (200, 300)) == comb(200, 3) * comb(300, 3)


def test_greedy_matches_exhaustive(texts_up_to_9):
    for u in compositions_up_to(4):
        for v in texts_up_to_9:
            sup = supports(u, v)
            assert contains(u, v) == bool(sup)
            best = max((p for p in range(len(u) + 1) if contains(u[:p], v)), default=0)
            assert longest_prefix_contained(u, v) == best


def test_covered_examples():
    assert is_covered((1, 4, 4, 1), (1, 4, 4, 4, 1))
    assert is_covered((1, 2, 2, 1), (1, 2, 2, 1))
    # the last part can play the final 1, e.g. support {1, 2, 4}
    assert is_covered((1, 2, 1), (1, 2, 1, 5))
    assert union_of_supports((1, 2, 1), (1, 2, 1, 5)) == {1, 2, 3, 4}
    assert not is_covered((1, 2, 2, 1), (1, 2, 1, 2, 1))
    assert union_of_supports((1, 2, 2, 1), (1, 2, 1, 2, 1)) == {1, 2, 4, 5}


def test_covered_matches_support_union(texts_up_to_9):
    for u in compositions_up_to(5):
        for v in texts_up_to_9:
            assert is_covered(u, v) == (union_of_supports(u, v) == set(range(1, len(v) + 1))), (u, v)


def test_extensions_examples():
    assert extensions((1, 1)) == {(2, 1), (1, 2), (1, 1, 1)}
    assert extensions((2,)) == {(3,), (1, 2), (2, 1)}
    assert extensions(()) == {(1,)}


def test_reductions_examples():
    assert reductions((1, 2, 2, 2, 1)) == {
        (2, 2, 2, 1),
        (1, 1, 2, 2, 1),
        (1, 2, 1, 2, 1),
        (1, 2, 2, 1, 1),
        (1, 2, 2, 2),
    }
    assert reductions((1,)) == {()}
    assert reductions((3,)) == {(2,)}


@given(compositions())
def test_neighbourhood_sizes_and_duality(c):
    for e in extensions(c):
        assert e.size == c.size + 1 and contains(c, e)
        assert c in reductions(e)
    for w in reductions(c):
        assert w.size == c.size - 1 and contains(w, c)
        assert c in extensions(w)


@given(compositions(max_parts=5, max_part=4), compositions(max_parts=7, max_part=5))
def test_counting_properties(u, v):
    if not u:
        return
    n = count_occurrences(u, v)
    assert n == count_occurrences_oracle(u, v)
    assert n == count_occurrences(reverse(u), reverse(v))
    assert (n > 0) == contains(u, v)
    assert all(count_occurrences(u, e) >= n for e in extensions(v))


def test_compositions_of_counts():
    assert [len(compositions_of(n)) for n in range(1, 8)] == [2 ** (n - 1) for n in range(1, 8)]
    assert compositions_of(0) == ((),)
    assert len(compositions_up_to(9)) == 511
