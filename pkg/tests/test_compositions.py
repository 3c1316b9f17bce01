import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from growthdiagrams.compositions import (
    WordEncodingError,
    binword_covers,
    binword_deletion_positions,
    composition_to_word,
    compositions_of,
    increment_last,
    lifted_covers,
    word_to_composition,
)

compositions = st.lists(st.integers(1, 5), max_size=6).map(tuple)


def all_words(length):
    if length == 0:
        return [""]
    return ["1" + "".join(bits) for bits in itertools.product("01", repeat=length - 1)]


def test_word_examples():
    assert composition_to_word((3, 2, 1)) == "100101"
    assert composition_to_word(()) == ""
    assert composition_to_word((1, 1, 1)) == "111"
    assert word_to_composition("100101") == (3, 2, 1)
    assert word_to_composition("") == ()
    assert word_to_composition("1010") == (2, 2)


def test_word_rejects_leading_zero():
    with pytest.raises(WordEncodingError):
        word_to_composition("010")
    with pytest.raises(WordEncodingError):
        word_to_composition("12")


@given(compositions)
def test_word_round_trip(c):
    assert word_to_composition(composition_to_word(c)) == c


def test_round_trip_exhaustive():
    for n in range(11):
        for c in compositions_of(n):
            assert word_to_composition(composition_to_word(c)) == c


def test_composition_counts():
    assert compositions_of(0) == ((),)
    for n in range(1, 11):
        cs = compositions_of(n)
        assert len(cs) == 2 ** (n - 1)
        assert len(set(cs)) == len(cs)
        assert all(sum(c) == n for c in cs)


def test_canonical_order_is_word_lexicographic():
    assert compositions_of(3) == ((3,), (2, 1), (1, 2), (1, 1, 1))
    for n in range(8):
        words = [composition_to_word(c) for c in compositions_of(n)]
        assert words == sorted(words)


def test_lifted_covers_examples():
    assert lifted_covers((2, 1)) == {(2, 2), (2, 1, 1)}
    assert lifted_covers(()) == {(1,)}
    assert lifted_covers((3,)) == {(4,), (3, 1)}


def test_lifted_out_degree():
    for n in range(11):
        for c in compositions_of(n):
            assert len(lifted_covers(c)) == (2 if c else 1)


def test_increment_last():
    assert increment_last(()) == (1,)
    assert increment_last((2, 1)) == (2, 2)


def test_binword_covers_examples():
    assert binword_covers((3,)) == {(4,), (3, 1), (1, 3), (2, 2)}
    assert binword_covers((1, 1)) == {(1, 2), (1, 1, 1), (2, 1)}
    assert binword_covers(()) == {(1,)}


def test_binword_covers_match_deletion_filter():
    # oracle: enumerate every word one letter longer and keep those with a
    # deletable non-first letter
    for n in range(1, 9):
        for c in compositions_of(n):
            w = composition_to_word(c)
            expected = {
                word_to_composition(v)
                for v in all_words(n + 1)
                if binword_deletion_positions(w, v)
            }
            assert binword_covers(c) == expected


def test_deletion_positions_examples():
    assert binword_deletion_positions("10100", "101100") == {3, 4}
    assert binword_deletion_positions("1010", "10100") == {4, 5}
    assert binword_deletion_positions("1", "10") == {2}
    assert binword_deletion_positions("10", "111") == frozenset()
    with pytest.raises(ValueError):
        binword_deletion_positions("1", "100")


def test_cover_iff_deletion_positions_nonempty():
    # away from the special (empty, 1) edge, the cover relation is exactly
    # the deletion test at word level
    for n in range(1, 8):
        for c in compositions_of(n):
            w = composition_to_word(c)
            for c2 in compositions_of(n + 1):
                positions = binword_deletion_positions(w, composition_to_word(c2))
                assert (c2 in binword_covers(c)) == bool(positions)


def test_covers_reach_every_composition():
    # walking up from the empty composition visits each rank completely,
    # in both graphs
    for covers in (lifted_covers, binword_covers):
        frontier = {()}
        for n in range(1, 9):
            frontier = {c2 for c in frontier for c2 in covers(c)}
            assert frontier == set(compositions_of(n))


def test_same_run_lemma():
    # every deletable position of a given pair carries the same letter
    for length in range(1, 11):
        for v in all_words(length):
            by_result = {}
            for q in range(2, length + 1):
                by_result.setdefault(v[: q - 1] + v[q:], []).append(v[q - 1])
            for letters in by_result.values():
                assert len(set(letters)) == 1
