import random
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from cwcodes.words import (
    Word,
    add,
    distance,
    is_binary_valued,
    negate,
    next_in_weight_class,
    weight,
    weight_class,
)


def binary_words(n):
    return st.integers(0, (1 << n) - 1).map(lambda x: Word.binary(n, x))


def test_weight_examples():
    assert weight(Word.zero(7)) == 0
    assert weight(Word.parse("10110")) == 3
    assert weight(Word.from_symbols([0, 3, 2, 0, 1], q=4)) == 3


def test_distance_examples():
    u = Word.parse("1011")
    assert distance(u, u) == 0
    assert distance(Word.parse("1100"), Word.parse("0011")) == 4
    assert distance(Word.from_symbols([0, 1, 2], 3), Word.from_symbols([0, 2, 2], 3)) == 1


def test_add_examples():
    assert add(Word.parse("1010"), Word.parse("0110")) == Word.parse("1100")
    u = Word.parse("10011")
    assert add(u, Word.zero(5)) == u
    assert add(Word.from_symbols([3], 4), Word.from_symbols([2], 4)) == Word.from_symbols([1], 4)


def test_mismatched_words():
    with pytest.raises(ValueError):
        distance(Word.parse("101"), Word.parse("1010"))
    with pytest.raises(ValueError):
        add(Word.parse("101"), Word.from_symbols([1, 0, 1], 3))


def test_is_binary_valued():
    assert is_binary_valued(Word.from_symbols([0, 1, 1, 0], 4))
    assert not is_binary_valued(Word.from_symbols([0, 2, 1, 0], 4))
    assert is_binary_valued(Word.parse("1111"))


def test_rendering_round_trip():
    for text in ["0", "1", "10110", "0" * 40 + "1", "1" * 128]:
        assert str(Word.parse(text)) == text
    assert str(Word.from_symbols([0, 3, 2], 4)) == "032"
    assert Word.parse("10110").symbols == (1, 0, 1, 1, 0)


def test_word_validation():
    with pytest.raises(ValueError):
        Word.parse("0120")
    with pytest.raises(ValueError):
        Word.binary(3, 8)
    with pytest.raises(ValueError):
        Word.from_symbols([0, 4], 4)
    with pytest.raises(ValueError):
        Word.binary(129, 0)


def test_next_in_weight_class_examples():
    assert next_in_weight_class(Word.parse("0011")) == Word.parse("0101")
    assert next_in_weight_class(Word.parse("1100")) is None
    seen = []
    u = Word.parse("00011")
    while u is not None:
        seen.append(u)
        u = next_in_weight_class(u)
    assert len(seen) == 10


def test_colex_order_matches_sorted_brute_force():
    for n in range(1, 9):
        for w in range(n + 1):
            brute = sorted(
                sum(1 << (n - 1 - i) for i in support) for support in combinations(range(n), w)
            )
            assert [x.data for x in weight_class(n, w)] == brute


def test_weight_class_sizes_up_to_20():
    for n in range(1, 21):
        for w in range(n + 1):
            words = [x.data for x in weight_class(n, w)]
            assert len(words) == comb(n, w)
            assert len(set(words)) == len(words)
            assert all(x.bit_count() == w for x in words)
            assert words == sorted(words)


@given(st.integers(1, 128).flatmap(lambda n: st.tuples(binary_words(n), binary_words(n))))
def test_distance_is_weight_of_difference(pair):
    u, v = pair
    assert distance(u, v) == weight(add(u, negate(v)))
    assert distance(u, v) == distance(v, u)
    assert add(u, u) == Word.zero(u.n)


@given(st.integers(2, 6).flatmap(
    lambda q: st.lists(st.lists(st.integers(0, q - 1), min_size=5, max_size=5), min_size=3, max_size=3)
    .map(lambda rows: [Word.from_symbols(r, q) for r in rows])))
def test_qary_group_laws(triple):
    a, b, c = triple
    assert add(a, b) == add(b, a)
    assert add(a, add(b, c)) == add(add(a, b), c)
    assert distance(a, c) <= distance(a, b) + distance(b, c)
    assert add(a, negate(a)) == Word.zero(a.n, a.q)


def test_random_binary_triangle_inequality():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 128)
        a, b, c = (Word.binary(n, rng.getrandbits(n)) for _ in range(3))
        assert distance(a, c) <= distance(a, b) + distance(b, c)
