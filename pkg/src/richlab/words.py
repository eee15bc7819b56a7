"""Finite words over Z_m and lazily materialized infinite word sources.

Letters are integers 0..m-1 stored as bytes, so factor extraction, hashing
and letterwise maps all run at C speed.  Infinite words are described by
small source objects (substitution fixed points, digit-sum words, mechanical
words, sum-operator images and preimages, periodic repetitions) that can
materialize any prefix on demand.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

DEFAULT_MAX_PREFIX = 10_000_000
MAX_PREFIX_ENV = "RICHLAB_MAX_PREFIX"


def digit_sum(k: int, base: int) -> int:
    """Sum of the digits of k written in the given base."""
    if k < 0:
        raise ValueError("digit_sum requires k >= 0")
    if base < 2:
        raise ValueError("digit_sum requires base >= 2")
    total = 0
    while k:
        total += k % base
        k //= base
    return total


def _coerce_data(letters: Union[bytes, bytearray, Iterable[int]], modulus: int) -> bytes:
    data = bytes(letters)
    if data and max(data) >= modulus:
        raise ValueError(f"letter {max(data)} out of range for Z_{modulus}")
    return data


class Word:
    """An immutable finite word over Z_m."""

    __slots__ = ("modulus", "data")

    def __init__(self, modulus: int, letters: Union[bytes, bytearray, Iterable[int]] = b""):
        if not 2 <= modulus <= 255:
            raise ValueError("modulus must be between 2 and 255")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "data", _coerce_data(letters, modulus))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def from_digits(cls, digits: str, modulus: int | None = None) -> "Word":
        """Build a word from a string of decimal digits, one letter each."""
        letters = [int(c) for c in digits]
        if modulus is None:
            modulus = max(letters, default=1) + 1
            modulus = max(modulus, 2)
        return cls(modulus, letters)

    def __len__(self) -> int:
        return len(self.data)

    def __iter__(self) -> Iterator[int]:
        return iter(self.data)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.modulus, self.data[item])
        return self.data[item]

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        if other.modulus != self.modulus:
            raise ValueError("cannot concatenate words over different alphabets")
        return Word(self.modulus, self.data + other.data)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Word)
            and self.modulus == other.modulus
            and self.data == other.data
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.data))

    def __lt__(self, other: "Word") -> bool:
        return (len(self.data), self.data) < (len(other.data), other.data)

    def __str__(self) -> str:
        return "".join(str(c) for c in self.data)

    def __repr__(self) -> str:
        return f"Word({self.modulus}, '{self}')"

    def letters(self) -> set[int]:
        return set(self.data)

    def factor_at(self, start: int, length: int) -> "Word":
        return Word(self.modulus, self.data[start : start + length])


class Substitution:
    """A nonerasing letter-to-word substitution over Z_m."""

    __slots__ = ("modulus", "images")

    def __init__(self, modulus: int, images: dict[int, Iterable[int]]):
        self.modulus = modulus
        table = []
        for a in range(modulus):
            if a not in images:
                raise ValueError(f"no image for letter {a}")
            img = _coerce_data(images[a], modulus)
            if not img:
                raise ValueError(f"empty image for letter {a}")
            table.append(img)
        self.images = tuple(table)

    def apply(self, word: Word) -> Word:
        if word.modulus != self.modulus:
            raise ValueError("alphabet mismatch")
        out = bytearray()
        for a in word.data:
            out += self.images[a]
        return Word(self.modulus, bytes(out))

    def is_prolongable_on(self, letter: int) -> bool:
        img = self.images[letter]
        return len(img) >= 2 and img[0] == letter

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Substitution)
            and self.modulus == other.modulus
            and self.images == other.images
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.images))

    def __repr__(self) -> str:
        rules = ",".join(
            f"{a}->{''.join(map(str, img))}" for a, img in enumerate(self.images)
        )
        return f"Substitution({self.modulus}, {rules})"


def max_prefix_cap() -> int:
    """Current materialization cap, overridable via RICHLAB_MAX_PREFIX."""
    raw = os.environ.get(MAX_PREFIX_ENV)
    if raw is None:
        return DEFAULT_MAX_PREFIX
    cap = int(raw)
    if cap <= 0:
        raise ValueError(f"{MAX_PREFIX_ENV} must be positive")
    return cap


class WordSource:
    """Base class for lazily materialized infinite (or periodic) words."""

    modulus: int

    def prefix(self, n: int) -> Word:
        if n < 0:
            raise ValueError("prefix length must be >= 0")
        cap = max_prefix_cap()
        if n > cap:
            raise ValueError(
                f"prefix length {n} exceeds cap {cap}; raise {MAX_PREFIX_ENV} to override"
            )
        return Word(self.modulus, self._materialize(n))

    def _materialize(self, n: int) -> bytes:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Explicit(WordSource):
    """A fixed finite word used as a source; prefixes beyond it fail."""

    word: Word

    @property
    def modulus(self) -> int:
        return self.word.modulus

    def _materialize(self, n: int) -> bytes:
        if n > len(self.word):
            raise ValueError(f"explicit word has only {len(self.word)} letters")
        return self.word.data[:n]

    def describe(self) -> str:
        return f"word({self.word})"


@dataclass(frozen=True)
class Periodic(WordSource):
    """The infinite periodic repetition of a nonempty finite word."""

    word: Word

    def __post_init__(self):
        if len(self.word) == 0:
            raise ValueError("periodic source needs a nonempty word")

    @property
    def modulus(self) -> int:
        return self.word.modulus

    def _materialize(self, n: int) -> bytes:
        reps = -(-n // len(self.word))
        return (self.word.data * reps)[:n]

    def describe(self) -> str:
        return f"periodic({self.word})"


@dataclass(frozen=True)
class Morphic(WordSource):
    """Fixed point of a substitution prolongable on the seed letter."""

    substitution: Substitution
    seed: int

    def __post_init__(self):
        if not 0 <= self.seed < self.substitution.modulus:
            raise ValueError("seed letter out of range")
        if not self.substitution.is_prolongable_on(self.seed):
            raise ValueError(
                f"substitution is not prolongable on {self.seed}: "
                "its image must start with the seed and have length >= 2"
            )

    @property
    def modulus(self) -> int:
        return self.substitution.modulus

    def _materialize(self, n: int) -> bytes:
        images = self.substitution.images
        out = bytearray(images[self.seed])
        pos = 1
        while len(out) < n:
            out += images[out[pos]]
            pos += 1
        return bytes(out[:n])

    def describe(self) -> str:
        rules = ",".join(
            f"{a}->{''.join(map(str, img))}"
            for a, img in enumerate(self.substitution.images)
        )
        return f"fix({rules};{self.seed})"


@dataclass(frozen=True)
class DigitSum(WordSource):
    """Word whose k-th letter is the base-b digit sum of k reduced mod m.

    Equals the fixed point of a -> a,a+1,...,a+b-1 (mod m) starting at 0,
    which is how prefixes are materialized.
    """

    base: int
    modulus: int

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base must be >= 2")
        if not 2 <= self.modulus <= 255:
            raise ValueError("modulus must be between 2 and 255")

    def substitution(self) -> Substitution:
        m, b = self.modulus, self.base
        return Substitution(m, {a: [(a + j) % m for j in range(b)] for a in range(m)})

    def _materialize(self, n: int) -> bytes:
        return Morphic(self.substitution(), 0)._materialize(n)

    def letter(self, k: int) -> int:
        return digit_sum(k, self.base) % self.modulus

    def describe(self) -> str:
        return f"tm({self.base},{self.modulus})"


def _golden_floor(j: int) -> int:
    # floor(j * (sqrt(5)-1)/2) computed exactly with integer arithmetic
    return (math.isqrt(5 * j * j) - j) // 2


@dataclass(frozen=True)
class Mechanical(WordSource):
    """Binary mechanical word s_k = floor((k+1)a + r) - floor(k a + r).

    With slope=None the slope and intercept are both (sqrt(5)-1)/2 and every
    letter is computed exactly via integer square roots.  A Fraction slope is
    evaluated with exact rational arithmetic; it yields an eventually periodic
    word, faithful to the irrational target only up to roughly its denominator.
    """

    slope: Fraction | None = None
    intercept: Fraction | None = None

    modulus = 2

    def __post_init__(self):
        if self.slope is not None and not 0 < self.slope < 1:
            raise ValueError("slope must lie strictly between 0 and 1")
        if self.intercept is not None and not 0 <= self.intercept < 1:
            raise ValueError("intercept must lie in [0, 1)")
        if self.slope is None and self.intercept is not None:
            raise ValueError("intercept without slope is not supported")

    def _materialize(self, n: int) -> bytes:
        if self.slope is None:
            # intercept equals slope, so floor(k*a + a) = floor((k+1)*a)
            prev = _golden_floor(1)
            out = bytearray()
            for k in range(n):
                cur = _golden_floor(k + 2)
                out.append(cur - prev)
                prev = cur
            return bytes(out)
        p, q = self.slope.numerator, self.slope.denominator
        rho = self.intercept if self.intercept is not None else self.slope
        rp = rho.numerator * q
        rq = rho.denominator * q
        prev = (0 * p * rho.denominator + rp) // rq
        out = bytearray()
        for k in range(n):
            cur = ((k + 1) * p * rho.denominator + rp) // rq
            out.append(cur - prev)
            prev = cur
        return bytes(out)

    def describe(self) -> str:
        if self.slope is None:
            return "sturmian()"
        return f"sturmian({self.slope})"


@dataclass(frozen=True)
class SImage(WordSource):
    """Image of a source under the sliding sum v_i = u_(i-1) + u_i (mod m)."""

    inner: WordSource

    @property
    def modulus(self) -> int:
        return self.inner.modulus

    def _materialize(self, n: int) -> bytes:
        u = self.inner._materialize(n + 1)
        m = self.modulus
        return bytes((a + b) % m for a, b in zip(u, u[1:]))

    def describe(self) -> str:
        return f"S({self.inner.describe()})"


@dataclass(frozen=True)
class SPreimage(WordSource):
    """The sum-operator preimage of a source, pinned down by its first letter."""

    inner: WordSource
    first: int

    def __post_init__(self):
        if not 0 <= self.first < self.inner.modulus:
            raise ValueError("first letter out of range")

    @property
    def modulus(self) -> int:
        return self.inner.modulus

    def _materialize(self, n: int) -> bytes:
        if n == 0:
            return b""
        v = self.inner._materialize(n - 1)
        m = self.modulus
        out = bytearray([self.first])
        last = self.first
        for x in v:
            last = (x - last) % m
            out.append(last)
        return bytes(out)

    def describe(self) -> str:
        return f"Sinv({self.inner.describe()},{self.first})"


def thue_morse(base: int = 2, modulus: int = 2) -> DigitSum:
    """Generalized Thue-Morse word over Z_m with digits in the given base."""
    return DigitSum(base, modulus)


def period_doubling() -> Morphic:
    """Fixed point of 1 -> 10, 0 -> 11; starts 1011101010111011..."""
    return Morphic(Substitution(2, {0: [1, 1], 1: [1, 0]}), seed=1)


def sturmian(slope: Fraction | None = None, intercept: Fraction | None = None) -> Mechanical:
    """Mechanical word; golden-ratio slope and intercept by default."""
    return Mechanical(slope, intercept)


def rote(first: int = 0) -> SPreimage:
    """A complementation-symmetric word: sum-preimage of the default Sturmian."""
    return SPreimage(sturmian(), first)
