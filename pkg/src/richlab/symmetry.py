"""Letterwise symmetries of Z_m words and the finite groups they generate.

Two families act on words over Z_m: morphisms pi_x (add x to every letter)
and antimorphisms psi_x (reverse the word and map each letter k to x - k).
Every psi_x is an involution.  Compositions stay inside the family:

    pi_x pi_y = pi_(x+y)    pi_x psi_y = psi_(x+y)
    psi_x pi_y = psi_(x-y)  psi_x psi_y = pi_(x-y)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .words import Word


@lru_cache(maxsize=256)
def _table(modulus: int, shift: int, antimorphism: bool) -> bytes:
    if antimorphism:
        return bytes((shift - c) % modulus for c in range(256))
    return bytes((shift + c) % modulus for c in range(256))


@dataclass(frozen=True, order=True)
class SymmetryElement:
    """One map pi_x or psi_x on words over Z_m."""

    modulus: int
    antimorphism: bool
    shift: int

    def __post_init__(self):
        if not 2 <= self.modulus <= 255:
            raise ValueError("modulus must be between 2 and 255")
        if not 0 <= self.shift < self.modulus:
            raise ValueError("shift must be reduced mod m")

    @property
    def is_identity(self) -> bool:
        return not self.antimorphism and self.shift == 0

    def apply_letter(self, a: int) -> int:
        if self.antimorphism:
            return (self.shift - a) % self.modulus
        return (self.shift + a) % self.modulus

    def apply(self, word: Word) -> Word:
        if word.modulus != self.modulus:
            raise ValueError("alphabet mismatch")
        data = word.data.translate(_table(self.modulus, self.shift, self.antimorphism))
        if self.antimorphism:
            data = data[::-1]
        return Word(self.modulus, data)

    def apply_bytes(self, data: bytes) -> bytes:
        out = data.translate(_table(self.modulus, self.shift, self.antimorphism))
        return out[::-1] if self.antimorphism else out

    def compose(self, other: "SymmetryElement") -> "SymmetryElement":
        """The map sending w to self(other(w))."""
        if other.modulus != self.modulus:
            raise ValueError("alphabet mismatch")
        m = self.modulus
        if self.antimorphism:
            shift = (self.shift - other.shift) % m
        else:
            shift = (self.shift + other.shift) % m
        return SymmetryElement(m, self.antimorphism != other.antimorphism, shift)

    def inverse(self) -> "SymmetryElement":
        if self.antimorphism:
            return self
        return SymmetryElement(self.modulus, False, (-self.shift) % self.modulus)

    def fixes_letter(self, a: int) -> bool:
        return self.apply_letter(a) == a

    def __str__(self) -> str:
        return f"{'psi' if self.antimorphism else 'pi'}_{self.shift}"

    def __repr__(self) -> str:
        return f"SymmetryElement({self.modulus}, {self})"


def morphism(modulus: int, shift: int) -> SymmetryElement:
    return SymmetryElement(modulus, False, shift % modulus)


def antimorphism(modulus: int, shift: int) -> SymmetryElement:
    return SymmetryElement(modulus, True, shift % modulus)


def identity(modulus: int) -> SymmetryElement:
    return morphism(modulus, 0)


def reversal(modulus: int = 2) -> SymmetryElement:
    """Plain word reversal, i.e. psi_0."""
    return antimorphism(modulus, 0)


def exchange_reversal() -> SymmetryElement:
    """Binary reversal combined with 0 <-> 1 exchange, i.e. psi_1 on Z_2."""
    return antimorphism(2, 1)


class SymmetryGroup:
    """A composition-closed set of symmetries with at least one antimorphism."""

    __slots__ = ("modulus", "elements", "_anti", "_morph")

    def __init__(self, elements: Iterable[SymmetryElement]):
        elems = frozenset(elements)
        if not elems:
            raise ValueError("group cannot be empty")
        moduli = {e.modulus for e in elems}
        if len(moduli) != 1:
            raise ValueError("mixed alphabets in group")
        self.modulus = moduli.pop()
        if identity(self.modulus) not in elems:
            raise ValueError("group must contain the identity")
        for a in elems:
            for b in elems:
                if a.compose(b) not in elems:
                    raise ValueError(f"not closed under composition: {a} o {b}")
        self.elements = elems
        self._anti = tuple(sorted(e for e in elems if e.antimorphism))
        self._morph = tuple(sorted(e for e in elems if not e.antimorphism))
        if not self._anti:
            raise ValueError("group must contain an antimorphism")

    @property
    def antimorphisms(self) -> tuple[SymmetryElement, ...]:
        return self._anti

    @property
    def morphisms(self) -> tuple[SymmetryElement, ...]:
        return self._morph

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[SymmetryElement]:
        return iter(sorted(self.elements))

    def __contains__(self, elem: SymmetryElement) -> bool:
        return elem in self.elements

    def __eq__(self, other) -> bool:
        return isinstance(other, SymmetryGroup) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def describe(self) -> str:
        m = self.modulus
        if len(self.elements) == 2:
            psi = self._anti[0]
            if psi.shift == 0:
                return "R"
            if m == 2 and psi.shift == 1:
                return "E"
        if self.elements == group_i2(m).elements:
            return "H" if m == 2 else f"I2({m})"
        if self.elements == group_i2_even(m).elements:
            return f"I2p({m})"
        gens = ",".join(f"psi:{e.shift}" for e in self._anti)
        return f"gen({gens})"

    def __repr__(self) -> str:
        return f"SymmetryGroup<{self.describe()} over Z_{self.modulus}>"


def generate_group(generators: Iterable[SymmetryElement]) -> SymmetryGroup:
    """Close a nonempty generator set under composition."""
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    m = gens[0].modulus
    elems = {identity(m)}
    frontier = list(gens)
    while frontier:
        nxt = []
        for g in frontier:
            if g in elems:
                continue
            elems.add(g)
            for h in list(elems):
                for comp in (g.compose(h), h.compose(g)):
                    if comp not in elems:
                        nxt.append(comp)
        frontier = nxt
    return SymmetryGroup(elems)


def group_r(modulus: int = 2) -> SymmetryGroup:
    """{id, reversal}."""
    return generate_group([reversal(modulus)])


def group_e() -> SymmetryGroup:
    """{id, exchange-reversal} on the binary alphabet."""
    return generate_group([exchange_reversal()])


def group_h() -> SymmetryGroup:
    """All four binary symmetries: id, exchange, reversal, exchange-reversal."""
    return generate_group([reversal(2), exchange_reversal()])


def group_i2(modulus: int) -> SymmetryGroup:
    """All pi_x and psi_x over Z_m; order 2m."""
    return SymmetryGroup(
        [morphism(modulus, x) for x in range(modulus)]
        + [antimorphism(modulus, x) for x in range(modulus)]
    )


def group_i2_even(modulus: int) -> SymmetryGroup:
    """Subgroup generated by the psi_x with even shift.

    Coincides with the full group for odd m; for even m it has order m and
    consists of the even-shift maps only.
    """
    return generate_group([antimorphism(modulus, (2 * y) % modulus) for y in range(modulus)])


def orbit(word: Word, group: SymmetryGroup) -> frozenset[Word]:
    """All images of the word under the group."""
    return frozenset(e.apply(word) for e in group.elements)


def orbit_canonical(word: Word, group: SymmetryGroup) -> Word:
    """Deterministic representative: the lexicographically least image."""
    return Word(word.modulus, min(e.apply_bytes(word.data) for e in group.elements))


def classify_palindrome(word: Word, group: SymmetryGroup) -> tuple[SymmetryElement, ...]:
    """The antimorphisms of the group that fix the word."""
    return tuple(e for e in group.antimorphisms if e.apply(word) == word)


def is_group_palindrome(word: Word, group: SymmetryGroup) -> bool:
    return len(word) == 0 or any(e.apply(word) == word for e in group.antimorphisms)


def gamma_psi(word: Word, psi: SymmetryElement) -> int:
    """Number of unordered pairs {a, psi(a)} of letters occurring in the word
    that are moved by the antimorphism's letter map."""
    if not psi.antimorphism:
        raise ValueError("gamma_psi needs an antimorphism")
    pairs = {
        frozenset((a, psi.apply_letter(a)))
        for a in set(word.data)
        if psi.apply_letter(a) != a
    }
    return len(pairs)


def gamma_group(word: Word, group: SymmetryGroup) -> int:
    """Number of letter orbits, among letters occurring in the word, whose
    members are fixed by no antimorphism of the group."""
    unfixed = [
        a
        for a in set(word.data)
        if all(not psi.fixes_letter(a) for psi in group.antimorphisms)
    ]
    orbits = {
        frozenset(e.apply_letter(a) for e in group.elements) for a in unfixed
    }
    return len(orbits)


def is_one_distinguishing(group: SymmetryGroup) -> bool:
    """Whether distinct antimorphisms of the group differ on every letter."""
    for p1, p2 in combinations(group.antimorphisms, 2):
        for a in range(group.modulus):
            if p1.apply_letter(a) == p2.apply_letter(a):
                return False
    return True
