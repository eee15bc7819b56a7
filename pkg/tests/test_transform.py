from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from richlab.transform import (
    decompose_pq,
    palindrome_center_classify,
    periodic_structure_check,
    s_apply,
    s_commutation_check,
    s_preimage,
    s_preimage_set,
)
from richlab.words import Word


def test_s_apply_known_values():
    assert str(s_apply(Word.from_digits("0110"))) == "101"
    assert str(s_apply(Word.from_digits("0123", modulus=4))) == "131"
    assert len(s_apply(Word.from_digits("0"))) == 0


def test_s_apply_short_words_give_empty_image():
    assert len(s_apply(Word.from_digits("", modulus=2))) == 0
    assert len(s_apply(Word.from_digits("1"))) == 0


def test_s_preimage_roundtrip_small():
    v = Word.from_digits("101")
    u0 = s_preimage(v, 0)
    u1 = s_preimage(v, 1)
    assert str(u0) == "0110"
    assert str(u1) == "1001"
    assert s_apply(u0) == v and s_apply(u1) == v


def test_s_preimage_set_is_complete():
    for m in (2, 3, 4):
        v = Word(m, bytes([1 % m, 0, 1 % m]))
        pres = s_preimage_set(v)
        assert len(pres) == m
        assert [u[0] for u in pres] == list(range(m))
        assert all(s_apply(u) == v for u in pres)


@given(st.integers(min_value=2, max_value=6), st.data())
@settings(max_examples=60, deadline=None)
def test_s_preimage_inverts_s(m, data):
    letters = st.integers(min_value=0, max_value=m - 1)
    u = Word(m, bytes(data.draw(letters) for _ in range(data.draw(st.integers(1, 12)))))
    v = s_apply(u)
    assert s_preimage(v, u[0]) == u


def test_commutation_exhaustive_binary():
    for length in range(1, 9):
        for tup in product((0, 1), repeat=length):
            w = Word(2, tup)
            assert s_commutation_check(w, 0)
            assert s_commutation_check(w, 1)


def test_center_classification_cases():
    c = palindrome_center_classify(Word.from_digits("01"))
    assert c.kind == "exchange" and c.image_center == 1 and c.image_is_palindrome
    c = palindrome_center_classify(Word.from_digits("0110"))
    assert c.kind == "reversal-even" and c.image_center == 0 and c.image_is_palindrome
    c = palindrome_center_classify(Word.from_digits("010"))
    assert c.kind == "reversal-odd" and c.image_is_palindrome
    assert palindrome_center_classify(Word.from_digits("001")).kind == "none"


def test_decompose_pq_roundtrip():
    p = Word.from_digits("010")
    q = Word.from_digits("10101")
    d = decompose_pq(p, q)
    assert str(d.base) == "0"
    assert d.left_part() == p and d.right_part() == q
    assert (d.left_power, d.right_power) == (1, 2)


def test_decompose_pq_rejects_non_palindromes():
    with pytest.raises(ValueError):
        decompose_pq(Word.from_digits("010"), Word.from_digits("011010"))


def test_periodic_structure_check():
    w = Word.from_digits("010101010101")
    hit = periodic_structure_check(w)
    assert hit is not None
    base, reps = hit
    assert str(base) == "0" and reps == 6
    assert str(base + base.from_digits("1")) * reps == str(w)
    assert periodic_structure_check(Word.from_digits("0110100110")) is None
