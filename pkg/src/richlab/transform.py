"""The sliding-sum operator on Z_m words and its structural properties.

The operator maps u_0 u_1 ... u_n to the word of consecutive letter sums
(u_0+u_1)(u_1+u_2)...(u_(n-1)+u_n) mod m, one letter shorter.  A word's
image determines it up to the choice of its first letter, which makes the
operator a clean bridge between palindromicity notions: on binary words it
sends both reversal-palindromes and exchange-palindromes to plain
palindromes, with the centre of the image telling the two cases apart.
"""

from __future__ import annotations

from dataclasses import dataclass

from .symmetry import antimorphism, exchange_reversal, reversal
from .words import Word


def s_apply_bytes(data: bytes, modulus: int) -> bytes:
    return bytes((a + b) % modulus for a, b in zip(data, data[1:]))


def s_apply(word: Word) -> Word:
    """Consecutive letter sums; empty for words of length <= 1."""
    return Word(word.modulus, s_apply_bytes(word.data, word.modulus))


def s_preimage(word: Word, first: int) -> Word:
    """The unique word starting with the given letter whose image is `word`."""
    m = word.modulus
    if not 0 <= first < m:
        raise ValueError("first letter out of range")
    out = bytearray([first])
    last = first
    for x in word.data:
        last = (x - last) % m
        out.append(last)
    return Word(m, bytes(out))


def s_preimage_set(word: Word) -> tuple[Word, ...]:
    """All m preimages, ordered by their first letter."""
    return tuple(s_preimage(word, a) for a in range(word.modulus))


def s_commutation_check(word: Word, y: int) -> bool:
    """Check s(psi_y(u)) == psi_(2y)(s(u)) on a concrete word."""
    m = word.modulus
    lhs = s_apply(antimorphism(m, y).apply(word))
    rhs = antimorphism(m, (2 * y) % m).apply(s_apply(word))
    return lhs == rhs


@dataclass(frozen=True)
class CenterClassification:
    """How a binary word's palindromicity shows up in its sum image."""

    kind: str  # "exchange" | "reversal-even" | "reversal-odd" | "none"
    image_center: int | None  # centre letter of the odd-length image, if any
    image_is_palindrome: bool


def palindrome_center_classify(word: Word) -> CenterClassification:
    """Classify a nonempty binary word and verify the shape of its image.

    Exchange-palindromes have even length and an odd-length palindromic
    image centred on 1; even reversal-palindromes give an odd-length image
    centred on 0; odd reversal-palindromes give an even-length palindromic
    image.  Anything else is "none".
    """
    if word.modulus != 2:
        raise ValueError("centre classification is defined on binary words")
    if len(word) == 0:
        raise ValueError("need a nonempty word")
    image = s_apply(word)
    image_pal = image.data == image.data[::-1]
    if exchange_reversal().apply(word) == word:
        kind = "exchange"
        center = image[len(image) // 2] if len(image) % 2 == 1 else None
        return CenterClassification(kind, center, image_pal)
    if reversal(2).apply(word) == word:
        if len(word) % 2 == 0:
            center = image[len(image) // 2] if len(image) % 2 == 1 else None
            return CenterClassification("reversal-even", center, image_pal)
        return CenterClassification("reversal-odd", None, image_pal)
    return CenterClassification("none", None, image_pal)


@dataclass(frozen=True)
class PQDecomposition:
    """Witness for splitting an exchange-palindrome into two palindromes.

    p = c (X(c) c)^i and q = (X(c) c)^j X(c), where X is the letterwise
    exchange-reversal; their product is (c X(c))^(i+j+1).
    """

    base: Word  # c
    left_power: int  # i
    right_power: int  # j

    @property
    def base_pair(self) -> Word:
        return self.base + exchange_reversal().apply(self.base)

    def left_part(self) -> Word:
        c = self.base
        xc = exchange_reversal().apply(c)
        out = c
        for _ in range(self.left_power):
            out = out + xc + c
        return out

    def right_part(self) -> Word:
        c = self.base
        xc = exchange_reversal().apply(c)
        out = Word(2)
        for _ in range(self.right_power):
            out = out + xc + c
        return out + xc


def decompose_pq(p: Word, q: Word) -> PQDecomposition:
    """Decompose palindromes p, q whose product is an exchange-palindrome.

    Returns the witness with the shortest base; the powers are then forced
    by the lengths.  Raises ValueError when the preconditions fail.
    """
    if p.modulus != 2 or q.modulus != 2:
        raise ValueError("decomposition is defined on binary words")
    if p.data != p.data[::-1]:
        raise ValueError("precondition failed: p is not a palindrome")
    if q.data != q.data[::-1]:
        raise ValueError("precondition failed: q is not a palindrome")
    pq = p + q
    if exchange_reversal().apply(pq) != pq:
        raise ValueError("precondition failed: pq is not an exchange-palindrome")
    if len(pq) == 0:
        return PQDecomposition(Word(2), 0, 0)
    for d in range(1, len(pq) + 1):
        if len(p) % d or len(q) % d:
            continue
        if (len(p) // d) % 2 == 0 or (len(q) // d) % 2 == 0:
            continue
        c = p[:d] if len(p) else q[:d]
        cand = PQDecomposition(Word(2, c.data), (len(p) // d - 1) // 2, (len(q) // d - 1) // 2)
        if cand.left_part() == p and cand.right_part() == q:
            return cand
    raise ValueError("no decomposition found; preconditions violated")


def periodic_structure_check(word: Word) -> tuple[Word, int] | None:
    """If the word is an exchange-palindrome splitting into two palindromes,
    return (c, j) with word = (c X(c))^j for the shortest such c; else None."""
    if word.modulus != 2:
        raise ValueError("periodic structure check is defined on binary words")
    if len(word) == 0 or exchange_reversal().apply(word) != word:
        return None
    data = word.data
    splittable = any(
        data[:k] == data[:k][::-1] and data[k:] == data[k:][::-1]
        for k in range(len(data) + 1)
    )
    if not splittable:
        return None
    xr = exchange_reversal()
    for d in range(1, len(word) + 1):
        if len(word) % (2 * d):
            continue
        c = word[:d]
        block = (c + xr.apply(c)).data
        reps = len(word) // (2 * d)
        if block * reps == data:
            return c, reps
    return None
