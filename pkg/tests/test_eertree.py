"""Palindromic tree vs the quadratic scan, plus known palindromic profiles."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from richlab.eertree import (
    PalTree,
    naive_pal_complexity,
    naive_pal_factors,
    pal_complexity,
    pal_factors,
    pal_total,
)
from richlab.symmetry import antimorphism, exchange_reversal, morphism, reversal
from richlab.words import Word, sturmian, thue_morse


def test_reversal_palindromes_of_small_word():
    w = Word.from_digits("011010011001")
    pals = {str(p) for p in pal_factors(w, reversal(2))}
    assert pals == {
        "",
        "0",
        "1",
        "00",
        "11",
        "010",
        "101",
        "0110",
        "1001",
        "001100",
        "10011001",
    }
    assert pal_total(w, reversal(2)) == 11


def test_exchange_palindromes_of_small_word():
    w = Word.from_digits("011010011001")
    pals = {str(p) for p in pal_factors(w, exchange_reversal())}
    assert pals == {
        "",
        "01",
        "10",
        "0011",
        "1100",
        "1010",
        "110100",
        "100110",
        "011001",
        "01101001",
    }


def test_profile_counts_match_factor_sets():
    w = thue_morse(2, 2).prefix(200)
    for psi in (reversal(2), exchange_reversal()):
        prof = pal_complexity(w, psi, 12)
        sets = pal_factors(w, psi)
        for n in range(13):
            assert prof[n] == sum(1 for p in sets if len(p) == n)


def test_empty_word_counts_once():
    w = Word.from_digits("", modulus=2)
    assert pal_total(w, reversal(2)) == 1
    assert naive_pal_factors(w, reversal(2)) == {w}


def test_morphism_rejected():
    w = Word.from_digits("01")
    with pytest.raises(ValueError):
        pal_complexity(w, morphism(2, 1))


def test_sturmian_palindrome_complexity():
    # characteristic Sturmian words have one palindrome of each even
    # length and two of each odd length
    w = sturmian().prefix(20_000)
    prof = pal_complexity(w, reversal(2), 60)
    assert prof[0] == 1
    assert all(prof[n] == (2 if n % 2 else 1) for n in range(1, 61))


def test_tree_spans_locate_real_occurrences():
    w = thue_morse(2, 2).prefix(100)
    tree = PalTree(w.data, 2, 0)
    for length, end in tree.spans():
        piece = w.data[end - length + 1 : end + 1]
        assert len(piece) == length
        assert piece == piece[::-1]


@given(
    st.integers(min_value=2, max_value=6).flatmap(
        lambda m: st.tuples(
            st.just(m),
            st.integers(min_value=0, max_value=m - 1),
            st.lists(st.integers(min_value=0, max_value=m - 1), max_size=60),
        )
    )
)
@settings(max_examples=120, deadline=None)
def test_tree_agrees_with_naive_scan(case):
    m, shift, letters = case
    w = Word(m, bytes(letters))
    psi = antimorphism(m, shift)
    assert pal_complexity(w, psi) == naive_pal_complexity(w, psi)
    assert pal_factors(w, psi) | {Word(m)} == naive_pal_factors(w, psi) | {Word(m)}
