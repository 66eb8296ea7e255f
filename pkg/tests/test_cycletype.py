import pytest
from hypothesis import given, strategies as st

from permroots.cycletype import (
    CycleType,
    CycleTypeSyntaxError,
    class_size,
    format_cycle_type,
    parity_of_type,
    parse_cycle_type,
    partitions_of,
)


def partition_numbers(limit):
    # p(n) via the "largest part at most m" recurrence, independent of partitions_of
    table = [[0] * (limit + 1) for _ in range(limit + 1)]
    for m in range(limit + 1):
        table[0][m] = 1
    for n in range(1, limit + 1):
        for m in range(1, limit + 1):
            table[n][m] = table[n][m - 1] + (table[n - m][m] if m <= n else 0)
    return [table[n][n] for n in range(limit + 1)]


def test_parse_examples():
    c = parse_cycle_type("1^4")
    assert c.as_dict() == {1: 4} and c.n == 4
    c = parse_cycle_type("2^2,5")
    assert c.as_dict() == {2: 2, 5: 1} and c.n == 9
    assert parse_cycle_type(" 3 ^ 2 , 1 ").as_dict() == {1: 1, 3: 2}
    assert parse_cycle_type("") == CycleType()


@pytest.mark.parametrize(
    "text, pos",
    [("1^0", 2), ("0^3", 0), ("2^1,2^3", 4), ("2^", 1), ("a", 0), ("1^2;3", 3), ("1^2,", 4)],
)
def test_parse_errors(text, pos):
    with pytest.raises(CycleTypeSyntaxError) as info:
        parse_cycle_type(text)
    assert info.value.position == pos


def test_format_is_canonical():
    assert format_cycle_type(parse_cycle_type("5,2^2")) == "2^2,5^1"
    assert format_cycle_type(CycleType()) == ""


def test_invariants_enforced():
    with pytest.raises(ValueError):
        CycleType(((2, 1), (1, 1)))
    with pytest.raises(ValueError):
        CycleType(((1, 0),))
    assert CycleType.from_mapping({3: 0, 1: 2}).parts == ((1, 2),)


cycle_types = st.dictionaries(st.integers(1, 30), st.integers(1, 9), max_size=6).map(CycleType.from_mapping)


@given(cycle_types)
def test_round_trip(c):
    text = format_cycle_type(c)
    assert parse_cycle_type(text) == c
    assert format_cycle_type(parse_cycle_type(text)) == text
    assert c.n == sum(l * m for l, m in c.as_dict().items())


def test_partitions_small():
    assert list(partitions_of(0)) == [CycleType()]
    assert [c.as_dict() for c in partitions_of(3)] == [{1: 3}, {1: 1, 2: 1}, {3: 1}]
    assert len(list(partitions_of(7))) == 15


def test_partition_counts_and_order():
    p = partition_numbers(12)
    for n in range(13):
        types = list(partitions_of(n))
        assert len(types) == p[n]
        assert len(set(types)) == p[n]
        assert all(c.n == n for c in types)
        vectors = [tuple(c.multiplicity(l) for l in range(1, n + 1)) for c in types]
        assert vectors == sorted(vectors, reverse=True)


def test_parity_of_type():
    assert parity_of_type(CycleType.from_mapping({1: 4})) == 1
    assert parity_of_type(CycleType.from_mapping({2: 1})) == -1
    assert parity_of_type(CycleType.from_mapping({4: 1, 3: 1})) == -1
    assert parity_of_type(CycleType.from_mapping({2: 2})) == 1


def test_class_sizes_sum_to_factorial():
    import math

    for n in range(9):
        assert sum(class_size(c) for c in partitions_of(n)) == math.factorial(n)
