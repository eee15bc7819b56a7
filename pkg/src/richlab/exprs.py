"""Parsers for the word and group expression strings used by the CLI.

Word expressions::

    tm(3,4)            digit-sum word, base 3 letters mod 4
    pd                 period doubling word
    sturmian()         mechanical word with golden slope and intercept
    sturmian(5/8)      mechanical word with a rational slope
    rote()  rote(5/8)  sum-preimage of the mechanical word, starting at 0
    fix(0->11,1->10;1) fixed point of a substitution, seed after ';'
    periodic(0121)     infinite repetition of a finite word
    word(011010)       the finite word itself
    S(expr)            sliding-sum image
    Sinv(expr,0)       sliding-sum preimage pinned by its first letter

Group expressions (``parse_group``): ``R``, ``E``, ``H``, ``I2(m)``,
``I2p(m)`` and ``gen(psi:x1,psi:x2,...)``.  ``E`` and ``H`` require a
binary alphabet; ``gen`` builds the generated group over the alphabet
passed as context.

Letters inside WORD literals are single decimal digits; standalone
letters (substitution seeds, preimage first letters, shifts) may be
multi-digit numbers.
"""

from __future__ import annotations

from fractions import Fraction

from .symmetry import (
    SymmetryGroup,
    antimorphism,
    generate_group,
    group_e,
    group_h,
    group_i2,
    group_i2_even,
    group_r,
)
from .words import (
    Explicit,
    Mechanical,
    Morphic,
    Periodic,
    SImage,
    SPreimage,
    Substitution,
    Word,
    WordSource,
    thue_morse,
)


class _Scanner:
    def __init__(self, text: str):
        self.text = "".join(text.split())
        self.pos = 0

    def done(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise ValueError(
                f"expected '{ch}' at position {self.pos} in {self.text!r}"
            )
        self.pos += 1

    def ident(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        if self.pos == start:
            raise ValueError(f"expected a name at position {start} in {self.text!r}")
        return self.text[start : self.pos]

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ValueError(
                f"expected a number at position {start} in {self.text!r}"
            )
        return int(self.text[start : self.pos])

    def digits(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ValueError(
                f"expected a digit word at position {start} in {self.text!r}"
            )
        return self.text[start : self.pos]

    def fraction(self) -> Fraction:
        num = self.integer()
        self.expect("/")
        den = self.integer()
        return Fraction(num, den)


def parse_word(text: str) -> WordSource:
    """Parse a word expression into a lazily materialized source."""
    sc = _Scanner(text)
    src = _parse_expr(sc)
    if not sc.done():
        raise ValueError(f"trailing input at position {sc.pos} in {sc.text!r}")
    return src


def _parse_expr(sc: _Scanner) -> WordSource:
    name = sc.ident()
    if name == "pd":
        return Morphic(Substitution(2, {0: [1, 1], 1: [1, 0]}), seed=1)
    if name == "tm":
        sc.expect("(")
        base = sc.integer()
        sc.expect(",")
        modulus = sc.integer()
        sc.expect(")")
        return thue_morse(base, modulus)
    if name in ("sturmian", "rote"):
        sc.expect("(")
        slope = None if sc.peek() == ")" else sc.fraction()
        sc.expect(")")
        mech = Mechanical(slope)
        return mech if name == "sturmian" else SPreimage(mech, 0)
    if name == "fix":
        sc.expect("(")
        rules: dict[int, list[int]] = {}
        while True:
            letter = sc.integer()
            sc.expect("-")
            sc.expect(">")
            image = [int(c) for c in sc.digits()]
            if letter in rules:
                raise ValueError(f"duplicate rule for letter {letter}")
            rules[letter] = image
            if sc.peek() != ",":
                break
            sc.expect(",")
        sc.expect(";")
        seed = sc.integer()
        sc.expect(")")
        top = max(max(rules), *(max(img) for img in rules.values()))
        return Morphic(Substitution(max(2, top + 1), rules), seed)
    if name == "periodic":
        sc.expect("(")
        word = Word.from_digits(sc.digits())
        sc.expect(")")
        return Periodic(word)
    if name == "word":
        sc.expect("(")
        word = Word.from_digits(sc.digits())
        sc.expect(")")
        return Explicit(word)
    if name == "S":
        sc.expect("(")
        inner = _parse_expr(sc)
        sc.expect(")")
        return SImage(inner)
    if name == "Sinv":
        sc.expect("(")
        inner = _parse_expr(sc)
        sc.expect(",")
        first = sc.integer()
        sc.expect(")")
        return SPreimage(inner, first)
    raise ValueError(f"unknown word constructor {name!r}")


def parse_group(text: str, modulus: int | None = None) -> SymmetryGroup:
    """Parse a group expression, checking it fits the alphabet context."""
    sc = _Scanner(text)
    group = _parse_group(sc, modulus)
    if not sc.done():
        raise ValueError(f"trailing input at position {sc.pos} in {sc.text!r}")
    if modulus is not None and group.modulus != modulus:
        raise ValueError(
            f"group over Z_{group.modulus} does not match alphabet Z_{modulus}"
        )
    return group


def _parse_group(sc: _Scanner, modulus: int | None) -> SymmetryGroup:
    name = sc.ident()
    if name == "R":
        return group_r(2 if modulus is None else modulus)
    if name in ("E", "H"):
        if modulus not in (None, 2):
            raise ValueError(f"group {name} is defined on the binary alphabet only")
        return group_e() if name == "E" else group_h()
    if name == "I2":
        sc.expect("(")
        m = sc.integer()
        sc.expect(")")
        return group_i2(m)
    if name == "I2p":
        sc.expect("(")
        m = sc.integer()
        sc.expect(")")
        return group_i2_even(m)
    if name == "gen":
        if modulus is None:
            raise ValueError("gen(...) needs an alphabet context")
        sc.expect("(")
        shifts = []
        while True:
            if sc.ident() != "psi":
                raise ValueError("gen(...) takes antimorphism entries 'psi:SHIFT'")
            sc.expect(":")
            shifts.append(sc.integer() % modulus)
            if sc.peek() != ",":
                break
            sc.expect(",")
        sc.expect(")")
        return generate_group(antimorphism(modulus, x) for x in shifts)
    raise ValueError(f"unknown group constructor {name!r}")
