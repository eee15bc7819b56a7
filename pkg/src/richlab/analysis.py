"""Prefix-exact language analysis: factor sets, extensions, return words.

Everything here is computed from one materialized prefix and phrased as an
exact statement about that prefix's factor language.  Statements about the
underlying infinite word are reliable only for factor lengths well below
the prefix length; callers are expected to keep a guard band (the reliable
ratio used elsewhere defaults to a factor of 100).
"""

from __future__ import annotations

from dataclasses import dataclass

from .symmetry import SymmetryGroup, orbit
from .words import Word

_OCCURRENCE_CACHE_SLOTS = 4


@dataclass(frozen=True)
class SpecialFactors:
    right: tuple[Word, ...]
    left: tuple[Word, ...]
    bispecial: tuple[Word, ...]


@dataclass(frozen=True)
class ReturnWords:
    """Complete group-return words of a factor's orbit within the prefix."""

    words: frozenset[Word]
    occurrence_count: int
    partial: bool  # fewer than two occurrences seen


class FactorIndex:
    """Per-length factor tables of one materialized prefix."""

    def __init__(self, word: Word, n_max: int | None = None):
        self.word = word
        self.n_max = len(word) if n_max is None else n_max
        if self.n_max > len(word):
            raise ValueError("n_max cannot exceed the prefix length")
        self._sets: dict[int, set[bytes]] = {}
        self._occ: dict[int, dict[bytes, list[int]]] = {}

    def _check(self, n: int) -> None:
        if n < 0 or n > self.n_max:
            raise ValueError(f"length {n} outside the indexed range 0..{self.n_max}")

    def factor_set(self, n: int) -> set[bytes]:
        self._check(n)
        cached = self._sets.get(n)
        if cached is None:
            data = self.word.data
            cached = {data[i : i + n] for i in range(len(data) - n + 1)}
            self._sets[n] = cached
        return cached

    def occurrences(self, n: int) -> dict[bytes, list[int]]:
        """Start positions of every length-n factor, in increasing order."""
        self._check(n)
        cached = self._occ.get(n)
        if cached is None:
            data = self.word.data
            cached = {}
            for i in range(len(data) - n + 1):
                cached.setdefault(data[i : i + n], []).append(i)
            if len(self._occ) >= _OCCURRENCE_CACHE_SLOTS:
                self._occ.pop(next(iter(self._occ)))
            self._occ[n] = cached
        return cached

    def factors(self, n: int) -> list[Word]:
        return [Word(self.word.modulus, b) for b in sorted(self.factor_set(n))]

    def complexity(self, n: int) -> int:
        return len(self.factor_set(n))

    def complexity_profile(self, n_max: int) -> list[int]:
        """C(0..n_max) for the prefix language."""
        self._check(n_max)
        return [self.complexity(n) for n in range(n_max + 1)]

    def __contains__(self, w: Word | bytes) -> bool:
        data = w.data if isinstance(w, Word) else bytes(w)
        return data in self.factor_set(len(data))

    def right_extensions(self, w: Word | bytes) -> set[int]:
        data = w.data if isinstance(w, Word) else bytes(w)
        text = self.word.data
        n = len(data)
        return {
            text[i + n]
            for i in self.occurrences(n).get(data, [])
            if i + n < len(text)
        }

    def left_extensions(self, w: Word | bytes) -> set[int]:
        data = w.data if isinstance(w, Word) else bytes(w)
        return {
            self.word.data[i - 1]
            for i in self.occurrences(len(data)).get(data, [])
            if i > 0
        }

    def extension_pairs(self, w: Word | bytes) -> set[tuple[int, int]]:
        """Pairs (a, b) with a w b in the prefix language."""
        data = w.data if isinstance(w, Word) else bytes(w)
        text = self.word.data
        n = len(data)
        return {
            (text[i - 1], text[i + n])
            for i in self.occurrences(n).get(data, [])
            if i > 0 and i + n < len(text)
        }

    def special_factors(self, n: int) -> SpecialFactors:
        m = self.word.modulus
        right, left, bi = [], [], []
        for b in sorted(self.factor_set(n)):
            w = Word(m, b)
            r = len(self.right_extensions(b)) > 1
            l = len(self.left_extensions(b)) > 1
            if r:
                right.append(w)
            if l:
                left.append(w)
            if r and l:
                bi.append(w)
        return SpecialFactors(tuple(right), tuple(left), tuple(bi))

    def bilateral_order(self, w: Word | bytes) -> int:
        """#(a w b) - #(w a) - #(a w) + 1 over the prefix language."""
        data = w.data if isinstance(w, Word) else bytes(w)
        if data not in self.factor_set(len(data)):
            raise ValueError("factor does not occur in the prefix")
        return (
            len(self.extension_pairs(data))
            - len(self.right_extensions(data))
            - len(self.left_extensions(data))
            + 1
        )

    def palindromic_extensions(self, w: Word | bytes) -> set[Word]:
        """The words a w a that are factors, for single letters a."""
        data = w.data if isinstance(w, Word) else bytes(w)
        if data not in self.factor_set(len(data)):
            raise ValueError("factor does not occur in the prefix")
        bigger = self.factor_set(len(data) + 2)
        m = self.word.modulus
        return {
            Word(m, bytes([a]) + data + bytes([a]))
            for a in range(m)
            if bytes([a]) + data + bytes([a]) in bigger
        }

    def closure_fraction(self, group: SymmetryGroup, n: int) -> float:
        """Fraction of length-n factors whose whole orbit is in the language."""
        fset = self.factor_set(n)
        if not fset:
            return 1.0
        good = sum(
            1
            for b in fset
            if all(e.apply_bytes(b) in fset for e in group.elements)
        )
        return good / len(fset)

    def closure_missing(self, group: SymmetryGroup, n: int) -> list[Word]:
        """Orbit images of length-n factors that are not factors themselves."""
        fset = self.factor_set(n)
        m = self.word.modulus
        missing = {
            e.apply_bytes(b)
            for b in fset
            for e in group.elements
            if e.apply_bytes(b) not in fset
        }
        return [Word(m, b) for b in sorted(missing)]

    def recurrence_gaps(self, n: int) -> dict[Word, int]:
        """Largest gap between consecutive occurrence starts, per factor."""
        m = self.word.modulus
        out = {}
        for b, occ in self.occurrences(n).items():
            if len(occ) >= 2:
                out[Word(m, b)] = max(j - i for i, j in zip(occ, occ[1:]))
        return out

    def max_recurrence_gap(self, n: int) -> int:
        gaps = self.recurrence_gaps(n)
        return max(gaps.values(), default=0)

    def complete_return_words(self, w: Word, group: SymmetryGroup) -> ReturnWords:
        """Factors that start and end with an orbit member of w and contain
        no other orbit occurrence; read off consecutive orbit occurrences."""
        n = len(w)
        if n == 0:
            raise ValueError("return words need a nonempty factor")
        occ_map = self.occurrences(n)
        member_bytes = {v.data for v in orbit(w, group)}
        positions: list[int] = []
        for b in member_bytes:
            positions.extend(occ_map.get(b, []))
        positions.sort()
        if not positions:
            raise ValueError("factor does not occur in the prefix")
        text = self.word.data
        m = self.word.modulus
        words = {
            Word(m, text[i : j + n]) for i, j in zip(positions, positions[1:])
        }
        return ReturnWords(frozenset(words), len(positions), len(positions) < 2)


def build_index(word: Word, n_max: int | None = None) -> FactorIndex:
    return FactorIndex(word, n_max)


@dataclass(frozen=True)
class WelldocResult:
    factor: Word
    residues: frozenset[tuple[int, int]]
    occurrences_scanned: int

    @property
    def complete(self) -> bool:
        return len(self.residues) == 4


def welldoc_residues(word: Word, factor: Word, budget: int | None = None) -> WelldocResult:
    """Parities (#0s mod 2, #1s mod 2) of prefixes preceding each occurrence.

    The well-distributed-occurrence property mod 2 asks for all four parity
    pairs to show up; scanning stops once they do or the occurrence budget
    runs out.
    """
    if word.modulus != 2:
        raise ValueError("occurrence parities are defined for binary words")
    text = word.data
    pat = factor.data
    n = len(pat)
    residues: set[tuple[int, int]] = set()
    ones = 0
    scanned = 0
    for i in range(len(text) - n + 1):
        if text[i : i + n] == pat:
            residues.add(((i - ones) & 1, ones & 1))
            scanned += 1
            if len(residues) == 4 or (budget is not None and scanned >= budget):
                break
        if i < len(text):
            ones += text[i]
    return WelldocResult(factor, frozenset(residues), scanned)


def welldoc2_check(word: Word, max_len: int, budget: int | None = None) -> list[WelldocResult]:
    """Run the parity check over every factor of length <= max_len."""
    idx = FactorIndex(word)
    results = [welldoc_residues(word, Word(2), budget)]
    for n in range(1, max_len + 1):
        for f in idx.factors(n):
            results.append(welldoc_residues(word, f, budget))
    return results
