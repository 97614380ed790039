"""Words, moves, convex orders."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crystaltiles.words import (
    applicable_moves,
    apply_move,
    compose,
    convex_order,
    count_reduced_words,
    enumerate_reduced_words,
    identity,
    inverse,
    is_reduced_word,
    length,
    longest_element,
    move_path,
    num_positive_roots,
    permutation_of_word,
    positive_roots,
    prefix_permutations,
    reduced_word_of_permutation,
    star_word,
)


def test_longest_element_reverses():
    assert longest_element(4) == (4, 3, 2, 1)
    assert length(longest_element(5)) == num_positive_roots(5)


def test_compose_and_inverse():
    u = permutation_of_word((1, 2), 3)
    assert compose(u, inverse(u)) == identity(3)
    assert compose(u, identity(3)) == u


@pytest.mark.parametrize("n,count", [(2, 1), (3, 2), (4, 16), (5, 768)])
def test_reduced_word_counts(n, count):
    words = enumerate_reduced_words(n)
    assert len(words) == count
    assert len(set(words)) == count
    assert count_reduced_words(n) == count
    for w in words:
        assert is_reduced_word(w, n)
        assert permutation_of_word(w, n) == longest_element(n)


def test_count_n6_slow_free():
    assert count_reduced_words(6) == 292864


def test_reduced_word_of_permutation_roundtrip():
    w = longest_element(4)
    word = reduced_word_of_permutation(w)
    assert permutation_of_word(word, 4) == w


def test_moves_preserve_permutation():
    word = (2, 1, 2, 3, 4, 3, 2, 1, 3, 2)
    for mv in applicable_moves(word):
        moved = apply_move(word, mv)
        assert moved != word
        assert permutation_of_word(moved, 5) == longest_element(5)
        assert apply_move(moved, mv) == word


def test_move_path_connects():
    words = enumerate_reduced_words(4)
    i, j = words[0], words[-1]
    cur = i
    for mv in move_path(i, j):
        cur = apply_move(cur, mv)
    assert cur == j
    assert move_path(i, i) == ()


def test_convex_order_is_total_on_roots():
    word = (1, 2, 1, 3, 2, 1)
    order = convex_order(word)
    assert sorted(order) == list(positive_roots(4))
    assert len(order) == len(word)


def test_prefix_permutations_shape():
    word = (1, 2, 1)
    prefixes = prefix_permutations(word, 3)
    assert prefixes[0] == identity(3)
    assert prefixes[-1] == longest_element(3)
    assert len(prefixes) == len(word) + 1


def test_star_word_involution():
    word = (1, 2, 1, 3, 2, 1)
    assert star_word(star_word(word)) == word
    assert star_word(word) == tuple(4 - a for a in reversed(word))
    assert is_reduced_word(star_word(word), 4)


@given(st.sampled_from(enumerate_reduced_words(4)))
def test_convex_order_property(word):
    """Every prefix inversion set is an initial segment of the order."""
    order = convex_order(word)
    assert len(set(order)) == len(order)
    for k in range(len(word)):
        u = permutation_of_word(word[: k + 1], 4)
        inversions = {
            (s, t)
            for s in range(1, 5)
            for t in range(s + 1, 5)
            if u.index(s) > u.index(t)
        }
        assert set(order[: k + 1]) == inversions


@given(st.sampled_from(enumerate_reduced_words(4)), st.data())
def test_apply_move_stays_reduced(word, data):
    mv = data.draw(st.sampled_from(applicable_moves(word)))
    assert is_reduced_word(apply_move(word, mv), 4)
