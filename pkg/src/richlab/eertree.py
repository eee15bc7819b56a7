"""Counting distinct psi-palindromic factors of a word.

Two independent routes are provided on purpose.  The optimized route is an
incremental palindromic tree generalized to an arbitrary involutory
antimorphism psi_x: a word p is a psi-palindrome when p equals its reversed
psi-image, so extending a palindromic suffix q by the letter c succeeds when
the letter in front of q equals psi(c), and a single letter a is palindromic
only when psi(a) = a.  The naive route expands around every centre and is
used as the oracle in tests; it is definition-shaped but quadratic on
degenerate inputs.
"""

from __future__ import annotations

from .symmetry import SymmetryElement
from .words import Word


class _Node:
    __slots__ = ("length", "link", "edges", "end")

    def __init__(self, length: int, link, end: int = -1):
        self.length = length
        self.link = link
        self.edges = {}
        self.end = end  # index of the last letter of the first occurrence


class PalTree:
    """Distinct psi_x-palindromic factors of a byte word, built in one pass."""

    def __init__(self, data: bytes, modulus: int, shift: int):
        self.data = data
        self.modulus = modulus
        self.shift = shift
        psi = [(shift - c) % modulus for c in range(modulus)]
        root_neg = _Node(-1, None)
        root_neg.link = root_neg
        root_zero = _Node(0, root_neg)
        self.nodes: list[_Node] = []
        last = root_zero
        for i, c in enumerate(data):
            pc = psi[c]
            x = last
            while True:
                j = i - x.length - 1
                if j >= 0 and data[j] == pc:
                    break
                if x is root_neg:
                    x = None
                    break
                x = x.link
            if x is None:
                last = root_zero
                continue
            existing = x.edges.get(c)
            if existing is not None:
                last = existing
                continue
            node = _Node(x.length + 2, root_zero, i)
            if node.length > 1:
                y = x.link
                while True:
                    j = i - y.length - 1
                    if j >= 0 and data[j] == pc:
                        break
                    if y is root_neg:
                        y = None
                        break
                    y = y.link
                if y is not None:
                    node.link = y.edges[c]
            x.edges[c] = node
            self.nodes.append(node)
            last = node

    def counts_by_length(self, n_max: int | None = None) -> list[int]:
        """counts[n] = number of distinct palindromic factors of length n;
        counts[0] = 1 for the empty word."""
        if n_max is None:
            n_max = len(self.data)
        counts = [0] * (n_max + 1)
        counts[0] = 1
        for node in self.nodes:
            if node.length <= n_max:
                counts[node.length] += 1
        return counts

    def total(self) -> int:
        """Number of distinct palindromic factors including the empty one."""
        return len(self.nodes) + 1

    def spans(self) -> list[tuple[int, int]]:
        """(length, end-index) of the first occurrence of each palindrome."""
        return [(node.length, node.end) for node in self.nodes]

    def factor_bytes(self) -> set[bytes]:
        """The nonempty palindromic factors themselves.

        Materializes every factor; total size is quadratic in the worst
        case, so prefer counts or spans on long words.
        """
        return {self.data[node.end - node.length + 1 : node.end + 1] for node in self.nodes}


def _require_antimorphism(psi: SymmetryElement) -> None:
    if not psi.antimorphism:
        raise ValueError("palindromicity is defined relative to an antimorphism")


def pal_complexity(word: Word, psi: SymmetryElement, n_max: int | None = None) -> list[int]:
    """Distinct psi-palindromic factor counts by length; index 0 is 1."""
    _require_antimorphism(psi)
    tree = PalTree(word.data, word.modulus, psi.shift)
    return tree.counts_by_length(n_max)


def pal_total(word: Word, psi: SymmetryElement) -> int:
    """Number of distinct psi-palindromic factors, the empty word included."""
    _require_antimorphism(psi)
    return PalTree(word.data, word.modulus, psi.shift).total()


def pal_factors(word: Word, psi: SymmetryElement) -> set[Word]:
    """All distinct psi-palindromic factors including the empty word."""
    _require_antimorphism(psi)
    tree = PalTree(word.data, word.modulus, psi.shift)
    out = {Word(word.modulus, b) for b in tree.factor_bytes()}
    out.add(Word(word.modulus))
    return out


def naive_pal_factors(word: Word, psi: SymmetryElement) -> set[Word]:
    """Oracle route: expand around every centre, collect matches."""
    _require_antimorphism(psi)
    m, data = word.modulus, word.data
    pm = [(psi.shift - c) % m for c in range(m)]
    found = {b""}
    n = len(data)
    for center in range(n):
        # odd lengths
        l, r = center, center
        while l >= 0 and r < n and data[l] == pm[data[r]]:
            found.add(data[l : r + 1])
            l -= 1
            r += 1
        # even lengths
        l, r = center, center + 1
        while l >= 0 and r < n and data[l] == pm[data[r]]:
            found.add(data[l : r + 1])
            l -= 1
            r += 1
    return {Word(m, b) for b in found}


def naive_pal_complexity(word: Word, psi: SymmetryElement, n_max: int | None = None) -> list[int]:
    if n_max is None:
        n_max = len(word)
    counts = [0] * (n_max + 1)
    for p in naive_pal_factors(word, psi):
        if len(p) <= n_max:
            counts[len(p)] += 1
    return counts
