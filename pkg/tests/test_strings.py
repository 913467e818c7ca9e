import itertools

import pytest
from hypothesis import given, strategies as st

from levgraph.strings import (
    Alphabet,
    GraphSpec,
    count_symbol,
    enumerate_strings,
    format_string,
    parse_string,
    prefix,
    rank,
    run_count,
    suffix,
    unrank,
)

W = (0, 1, 1, 2, 1)  # 01121

words = st.lists(st.integers(0, 3), max_size=12).map(tuple)


def test_count_symbol_examples():
    assert count_symbol(W, 0) == 1
    assert count_symbol(W, 1) == 3
    assert count_symbol(W, 2) == 1
    assert count_symbol((), 0) == 0


def test_count_symbol_rejects_symbol_outside_alphabet():
    with pytest.raises(ValueError):
        count_symbol(W, 3, a=3)
    with pytest.raises(ValueError):
        count_symbol(W, -1)


def test_run_count_examples():
    assert run_count(W) == 4
    assert run_count(()) == 0
    assert run_count((0, 0, 0)) == 1


def test_prefix_suffix():
    assert prefix(W, 2) == (0, 1)
    assert suffix(W, 2) == (2, 1)
    assert prefix(W, len(W)) == W
    assert suffix(W, 0) == ()
    with pytest.raises(ValueError):
        prefix(W, 6)
    with pytest.raises(ValueError):
        suffix(W, -1)


@given(words)
def test_counts_sum_to_length_and_runs_bounded(w):
    assert sum(count_symbol(w, s) for s in range(4)) == len(w)
    assert run_count(w) <= len(w)
    if w:
        assert run_count(w) >= 1


def test_alphabet_and_spec_validation():
    with pytest.raises(ValueError):
        Alphabet(1)
    with pytest.raises(ValueError):
        GraphSpec(0, 2, 1)
    with pytest.raises(ValueError):
        GraphSpec(3, 2, 2)
    with pytest.raises(ValueError):
        GraphSpec(-1, 2, 2)
    assert GraphSpec(1, 4, 3).delta == 4


def test_rank_unrank_small():
    spec = GraphSpec(0, 3, 2)
    assert unrank(0, spec) == ()
    assert unrank(1, spec) == (0,)
    assert unrank(2, spec) == (1,)
    assert unrank(3, spec) == (0, 0)
    assert spec.vertex_count == 15
    assert [rank(unrank(r, spec), spec) for r in range(15)] == list(range(15))
    with pytest.raises(ValueError):
        unrank(15, spec)
    with pytest.raises(ValueError):
        rank((0, 0, 0, 0), spec)


@pytest.mark.parametrize("spec", [GraphSpec(0, 3, 2), GraphSpec(2, 4, 3), GraphSpec(0, 5, 4), GraphSpec(3, 3, 5)])
def test_rank_round_trip_exhaustive(spec):
    strings = list(enumerate_strings(spec))
    assert len(strings) == spec.vertex_count == len(set(strings))
    ranks = [rank(w, spec) for w in strings]
    assert ranks == list(range(spec.vertex_count))
    assert all(unrank(r, spec) == w for r, w in zip(ranks, strings))


def test_enumeration_order_and_sizes():
    assert list(enumerate_strings(GraphSpec(0, 1, 3))) == [(), (0,), (1,), (2,)]
    assert len(list(enumerate_strings(GraphSpec(3, 3, 2)))) == 8
    ws = list(enumerate_strings(GraphSpec(0, 3, 2)))
    keys = [(len(w), w) for w in ws]
    assert keys == sorted(keys)


@pytest.mark.parametrize("text,a,w", [
    ("01121", 3, (0, 1, 1, 2, 1)),
    ("-", 2, ()),
    ("0,11,3", 12, (0, 11, 3)),
    ("7", 12, (7,)),
])
def test_literal_round_trip(text, a, w):
    assert parse_string(text, a) == w
    assert format_string(w, a) == text


@pytest.mark.parametrize("text", ["", "012x", "2", "0,-1"])
def test_parse_rejects_bad_literals(text):
    with pytest.raises(ValueError):
        parse_string(text, 2)


def test_every_string_of_alphabet_round_trips_through_literal():
    for a in (2, 11):
        for w in itertools.product(range(a), repeat=2):
            assert parse_string(format_string(w, a), a) == w
