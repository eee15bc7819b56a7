import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from richlab.symmetry import (
    SymmetryGroup,
    antimorphism,
    classify_palindrome,
    exchange_reversal,
    gamma_group,
    gamma_psi,
    generate_group,
    group_e,
    group_h,
    group_i2,
    group_i2_even,
    group_r,
    identity,
    is_group_palindrome,
    is_one_distinguishing,
    morphism,
    orbit,
    orbit_canonical,
    reversal,
)
from richlab.words import Word


def test_letter_actions():
    psi2 = antimorphism(4, 2)
    assert [psi2.apply_letter(a) for a in range(4)] == [2, 1, 0, 3]
    pi3 = morphism(4, 3)
    assert [pi3.apply_letter(a) for a in range(4)] == [3, 0, 1, 2]


def test_apply_reverses_only_for_antimorphisms():
    w = Word.from_digits("012")
    assert str(morphism(3, 1).apply(w)) == "120"
    assert str(antimorphism(3, 0).apply(w)) == "120"
    assert str(antimorphism(3, 1).apply(w)) == "201"


def test_reversal_and_exchange():
    w = Word.from_digits("0110")
    assert reversal(2).apply(w) == w
    assert str(exchange_reversal().apply(w)) == "1001"
    assert exchange_reversal().apply(Word.from_digits("01")) == Word.from_digits("01")


def test_involutions_and_composition():
    for m in (2, 3, 4, 6):
        for x in range(m):
            psi = antimorphism(m, x)
            assert psi.compose(psi) == identity(m)
            assert psi.inverse() == psi
        for x in range(m):
            pi = morphism(m, x)
            assert pi.compose(pi.inverse()) == identity(m)


@given(st.integers(min_value=2, max_value=6), st.data())
@settings(max_examples=50, deadline=None)
def test_compose_matches_pointwise_action(m, data):
    xs = st.integers(min_value=0, max_value=m - 1)
    kinds = st.booleans()
    e1 = (antimorphism if data.draw(kinds) else morphism)(m, data.draw(xs))
    e2 = (antimorphism if data.draw(kinds) else morphism)(m, data.draw(xs))
    w = Word(m, bytes(data.draw(xs) for _ in range(data.draw(st.integers(0, 8)))))
    assert e1.compose(e2).apply(w) == e1.apply(e2.apply(w))


def test_group_orders_and_labels():
    assert len(group_r()) == 2 and group_r().describe() == "R"
    assert len(group_e()) == 2 and group_e().describe() == "E"
    assert len(group_h()) == 4 and group_h().describe() == "H"
    for m in (3, 4, 5, 6):
        assert len(group_i2(m)) == 2 * m
        assert group_i2(m).describe() == f"I2({m})"
    assert len(group_i2_even(4)) == 4
    assert group_i2_even(4).describe() == "I2p(4)"
    # odd modulus: the even shifts already generate everything
    assert group_i2_even(5) == group_i2(5)
    assert group_i2_even(5).describe() == "I2(5)"


def test_group_h_contents():
    h = group_h()
    assert identity(2) in h
    assert reversal(2) in h
    assert exchange_reversal() in h
    assert len(h.antimorphisms) == 2
    assert len(h.morphisms) == 2


def test_generate_group_closure():
    g = generate_group([antimorphism(6, 1), antimorphism(6, 3)])
    for a in g:
        for b in g:
            assert a.compose(b) in g
        assert a.inverse() in g


def test_generate_group_requires_identity_closure():
    g = generate_group([antimorphism(4, 0)])
    assert len(g) == 2
    assert g.describe() == "R"


def test_orbit_and_canonical():
    w = Word.from_digits("001")
    o = orbit(w, group_h())
    assert o == {
        Word.from_digits("001"),
        Word.from_digits("100"),
        Word.from_digits("110"),
        Word.from_digits("011"),
    }
    assert orbit_canonical(w, group_h()) == Word.from_digits("001")
    # the morphism part can collapse orbits over larger alphabets
    assert len(orbit(Word.from_digits("0123"), group_i2(4))) == 4


def test_classification():
    r, e = reversal(2), exchange_reversal()
    assert classify_palindrome(Word.from_digits("0110"), group_h()) == (r,)
    assert classify_palindrome(Word.from_digits("01"), group_h()) == (e,)
    assert classify_palindrome(Word.from_digits("", modulus=2), group_h()) == (r, e)
    assert not is_group_palindrome(Word.from_digits("001"), group_h())
    assert is_group_palindrome(Word.from_digits("001100"), group_r())


def test_gamma():
    w = Word.from_digits("0110")
    assert gamma_psi(w, reversal(2)) == 0
    assert gamma_psi(w, exchange_reversal()) == 1
    # one occurring letter is enough for its pair to count
    assert gamma_psi(Word.from_digits("000"), exchange_reversal()) == 1
    assert gamma_group(w, group_h()) == 0
    assert gamma_group(w, group_e()) == 1
    # over Z_4, psi_1 pairs 0<->1 and 2<->3, fixing nothing
    w4 = Word.from_digits("0123")
    assert gamma_psi(w4, antimorphism(4, 1)) == 2
    assert gamma_psi(w4, antimorphism(4, 2)) == 1


def test_one_distinguishing():
    assert is_one_distinguishing(group_h())
    assert is_one_distinguishing(group_i2(4))
    assert is_one_distinguishing(group_i2_even(4))
    assert is_one_distinguishing(group_i2_even(9))


def test_group_equality_is_set_like():
    g1 = generate_group([reversal(2), exchange_reversal()])
    assert g1 == group_h()
    assert SymmetryGroup([identity(2), reversal(2)]) == group_r()


def test_mixed_moduli_rejected():
    with pytest.raises(ValueError):
        SymmetryGroup([identity(2), identity(3)])
    with pytest.raises(ValueError):
        reversal(2).apply(Word.from_digits("012"))
