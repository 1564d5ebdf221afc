from collections import Counter
from math import factorial

import pytest
from hypothesis import given, strategies as st

from reflect_branch.partitions import (
    check_partition,
    covers,
    format_partition,
    lex_compare,
    one_box_additions,
    one_box_removals,
    parse_partition,
    partitions_of,
    size,
    syt_count,
)


@st.composite
def partition_strategy(draw, max_n=10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return ()
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(0, k - 1), min_size=n, max_size=n))
    return tuple(sorted(Counter(bins).values(), reverse=True))


def enumerate_syt(shape):
    """Independent oracle: count standard tableaux by explicit filling."""
    n = size(shape)
    if n == 0:
        return 1

    def fill(row_fill):
        placed = sum(row_fill)
        if placed == n:
            return 1
        total = 0
        for i in range(len(shape)):
            if row_fill[i] < shape[i] and (i == 0 or row_fill[i - 1] > row_fill[i]):
                row_fill[i] += 1
                total += fill(row_fill)
                row_fill[i] -= 1
        return total

    return fill([0] * len(shape))


def test_size_examples():
    assert size(()) == 0
    assert size((2, 1)) == 3
    assert size((5, 5, 1)) == 11


def test_lex_compare_examples():
    assert lex_compare((), (1,)) == -1
    assert lex_compare((2, 1), (2, 1)) == 0
    assert lex_compare((3,), (2, 2)) == 1


def test_covers_examples():
    assert covers((), (1,))
    assert covers((2, 1), (2, 2))
    assert not covers((1,), (3,))
    assert not covers((2, 2), (2, 1))


def test_syt_count_examples():
    assert syt_count(()) == 1
    assert syt_count((2, 1)) == 2
    assert syt_count((3, 2)) == 5


def test_syt_count_against_enumeration():
    for n in range(0, 9):
        for shape in partitions_of(n):
            assert syt_count(shape) == enumerate_syt(shape), shape


def test_syt_square_sum_is_factorial():
    for n in range(0, 9):
        assert sum(syt_count(p) ** 2 for p in partitions_of(n)) == factorial(n)


def test_covers_implies_lex_less():
    for n in range(0, 8):
        for q in partitions_of(n + 1):
            for p in partitions_of(n):
                if covers(p, q):
                    assert lex_compare(p, q) == -1


def test_removal_count_matches_distinct_parts():
    for n in range(1, 9):
        for q in partitions_of(n):
            preds = [p for p in partitions_of(n - 1) if covers(p, q)]
            assert len(preds) == len(set(q))
            assert sorted(preds) == sorted(one_box_removals(q))


def test_additions_match_covers():
    for n in range(0, 8):
        for p in partitions_of(n):
            succs = [q for q in partitions_of(n + 1) if covers(p, q)]
            assert sorted(succs) == sorted(one_box_additions(p))


@given(partition_strategy())
def test_removals_are_covered(p):
    for smaller in one_box_removals(p):
        assert covers(smaller, p)
        assert size(smaller) == size(p) - 1


@given(partition_strategy(), partition_strategy())
def test_lex_compare_antisymmetric(p, q):
    assert lex_compare(p, q) == -lex_compare(q, p)


def test_check_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        check_partition((1, 2))
    with pytest.raises(ValueError):
        check_partition((2, 0))


def test_text_round_trip():
    assert format_partition((3, 2)) == "[3,2]"
    assert format_partition(()) == "[]"
    assert parse_partition("[3,2]") == (3, 2)
    assert parse_partition("[]") == ()
    with pytest.raises(ValueError):
        parse_partition("3,2")
