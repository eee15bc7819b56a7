"""Defects, equality audits and richness verdicts.

A finite word over Z_m can contain at most |w| + 1 - gamma distinct
psi-palindromic factors (empty word included), where gamma counts the
letter pairs moved by psi; the shortfall is the word's defect.  For a
group G of symmetries the same budget reads

    D_G(w) = |w| + 1 - #palindromic-orbits(w) - gamma_G(w),

counting orbits of factors that contain a G-palindrome.  On the infinite
side, a group-closed word with a letter-distinguishing G satisfies, for
every n >= 1,

    dC(n) + #G >= sum over antimorphisms psi of P_psi(n) + P_psi(n+1),

with equality at every n exactly for words of zero G-defect.  The audits
here evaluate both sides on a long prefix and report the slack series.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import FactorIndex
from .eertree import PalTree
from .symmetry import (
    SymmetryGroup,
    exchange_reversal,
    gamma_group,
    group_r,
    is_group_palindrome,
    is_one_distinguishing,
    reversal,
)
from .transform import s_apply
from .words import Word, WordSource

RELIABLE_RATIO = 100


def pal_profile(word: Word, psi, n_max: int | None = None) -> list[int]:
    """Distinct psi-palindromic factor counts by length (index 0 is 1)."""
    if not psi.antimorphism:
        raise ValueError("profiles are per antimorphism")
    return PalTree(word.data, word.modulus, psi.shift).counts_by_length(n_max)


def pal_orbit_count(word: Word, group: SymmetryGroup) -> int:
    """Number of factor orbits containing a group-palindrome, [eps] included."""
    m = word.modulus
    shifts = [e.shift for e in group.morphisms]
    trees = [
        PalTree(word.data, m, psi.shift) for psi in group.antimorphisms
    ]
    if len(group) == 2:
        # single antimorphism: orbits of palindromes are singletons
        return trees[0].total()
    by_length: dict[int, set[bytes]] = {}
    for tree in trees:
        for length, end in tree.spans():
            by_length.setdefault(length, set()).add(word.data[end - length + 1 : end + 1])
    tables = [bytes((x + c) % m for c in range(256)) for x in shifts]
    total = 1
    for pals in by_length.values():
        canon = {min(p.translate(t) for t in tables) for p in pals}
        total += len(canon)
    return total


def defect(word: Word, group: SymmetryGroup) -> int:
    """Palindromic defect of a finite word relative to a symmetry group."""
    if word.modulus != group.modulus:
        raise ValueError("alphabet mismatch")
    return len(word) + 1 - pal_orbit_count(word, group) - gamma_group(word, group)


def defect_profile(
    source: WordSource, group: SymmetryGroup, schedule: list[int]
) -> list[tuple[int, int]]:
    """Defect of each scheduled prefix length, shortest first."""
    out = []
    for n in sorted(schedule):
        out.append((n, defect(source.prefix(n), group)))
    return out


@dataclass(frozen=True)
class GroupProfile:
    """Per-length counting data for one prefix and one symmetry group."""

    word_expr: str
    group_label: str
    horizon: int
    n_max: int
    complexity: list[int]  # C(0..n_max+1)
    pal: dict[int, list[int]]  # antimorphism shift -> P(0..n_max+1)
    slack: list[int]  # slack[n-1] for n = 1..n_max
    closure: dict[int, float]
    letters: tuple[int, ...]

    @property
    def delta_complexity(self) -> list[int]:
        return [b - a for a, b in zip(self.complexity, self.complexity[1:])]

    def zero_slack_through(self, n_max: int | None = None) -> bool:
        upto = len(self.slack) if n_max is None else n_max
        return all(s == 0 for s in self.slack[:upto])

    def first_nonzero_slack(self) -> tuple[int, int] | None:
        for i, s in enumerate(self.slack):
            if s != 0:
                return (i + 1, s)
        return None


_CLOSURE_SAMPLE = (1, 2, 4, 8)


def analyze_profile(
    source: WordSource | Word,
    group: SymmetryGroup,
    n_max: int,
    horizon: int | None = None,
    expr: str | None = None,
) -> GroupProfile:
    """Materialize a prefix and collect complexity, palindromic counts and
    the equality-slack series for the group."""
    if isinstance(source, Word):
        word = source
        label = expr or (f"word({word})" if len(word) <= 40 else "word(...)")
    else:
        if horizon is None:
            raise ValueError("horizon required when analyzing a source")
        word = source.prefix(horizon)
        label = expr or source.describe()
    if n_max + 1 > len(word):
        raise ValueError("n_max too large for the horizon")
    if not is_one_distinguishing(group):
        raise ValueError("group antimorphisms must differ on every letter")
    idx = FactorIndex(word)
    comp = idx.complexity_profile(n_max + 1)
    pal = {
        psi.shift: pal_profile(word, psi, n_max + 1) for psi in group.antimorphisms
    }
    order = len(group)
    slack = []
    for n in range(1, n_max + 1):
        dc = comp[n + 1] - comp[n]
        total = sum(p[n] + p[n + 1] for p in pal.values())
        slack.append(dc + order - total)
    closure = {
        n: idx.closure_fraction(group, n) for n in _CLOSURE_SAMPLE if n <= n_max
    }
    return GroupProfile(
        word_expr=label,
        group_label=group.describe(),
        horizon=len(word),
        n_max=n_max,
        complexity=comp,
        pal=pal,
        slack=slack,
        closure=closure,
        letters=tuple(sorted(word.letters())),
    )


@dataclass(frozen=True)
class EqualityAudit:
    profile: GroupProfile
    nonnegative: bool
    zero_all: bool
    first_nonzero: tuple[int, int] | None
    closed_at_samples: bool


def equality_audit(
    source: WordSource | Word,
    group: SymmetryGroup,
    n_max: int,
    horizon: int | None = None,
) -> EqualityAudit:
    prof = analyze_profile(source, group, n_max, horizon)
    return EqualityAudit(
        profile=prof,
        nonnegative=all(s >= 0 for s in prof.slack),
        zero_all=prof.zero_slack_through(),
        first_nonzero=prof.first_nonzero_slack(),
        closed_at_samples=all(f == 1.0 for f in prof.closure.values()),
    )


def t_series(word: Word, n_max: int) -> list[int]:
    """T(n) = dC(n) + 2 - P(n+1) - P(n) for plain reversal, n = 1..n_max."""
    idx = FactorIndex(word)
    comp = idx.complexity_profile(n_max + 1)
    p = pal_profile(word, reversal(word.modulus), n_max + 1)
    return [
        (comp[n + 1] - comp[n]) + 2 - p[n + 1] - p[n] for n in range(1, n_max + 1)
    ]


@dataclass(frozen=True)
class TransferAudit:
    """Outcome of comparing a binary word's profiles with its sum image's."""

    n_max: int
    horizon: int
    first_delta_mismatch: int | None
    first_pal_mismatch: int | None

    @property
    def delta_ok(self) -> bool:
        return self.first_delta_mismatch is None

    @property
    def pal_ok(self) -> bool:
        return self.first_pal_mismatch is None


def sum_image_transfer(
    source: WordSource | Word, n_max: int, horizon: int | None = None
) -> TransferAudit:
    """Check the factor-2 transfer of profiles onto the sum image.

    For a binary word u closed under both involutory antimorphisms, with
    v = S(u), both 2 dC_v(n) = dC_u(n+1) and 2 P_v(n) = P^R_u(n+1) +
    P^E_u(n+1) should hold; returns the first n <= n_max violating each.
    """
    if isinstance(source, Word):
        u = source
    else:
        if horizon is None:
            raise ValueError("horizon required when auditing a source")
        u = source.prefix(horizon)
    if u.modulus != 2:
        raise ValueError("profile transfer is stated for binary words")
    v = s_apply(u)
    cu = FactorIndex(u).complexity_profile(n_max + 1)
    cv = FactorIndex(v).complexity_profile(n_max)
    pr_u = pal_profile(u, reversal(2), n_max + 1)
    pe_u = pal_profile(u, exchange_reversal(), n_max + 1)
    pr_v = pal_profile(v, reversal(2), n_max)
    delta_bad = next(
        (
            n
            for n in range(1, n_max + 1)
            if 2 * (cv[n] - cv[n - 1]) != cu[n + 1] - cu[n]
        ),
        None,
    )
    pal_bad = next(
        (n for n in range(1, n_max + 1) if 2 * pr_v[n] != pr_u[n + 1] + pe_u[n + 1]),
        None,
    )
    return TransferAudit(n_max, len(u), delta_bad, pal_bad)


@dataclass(frozen=True)
class IdentityCheck:
    doubled_defect: int
    series_sum: int
    n_max: int
    tail_zero: bool

    @property
    def equal(self) -> bool:
        return self.doubled_defect == self.series_sum


def reversal_identity_check(word: Word, n_max: int | None = None) -> IdentityCheck:
    """Compare 2 * defect against the summed T series on one prefix.

    The two agree exactly once the series has stabilized (a zero tail);
    a nonzero tail means the horizon is too short to call it.
    """
    if n_max is None:
        n_max = max(1, len(word) // RELIABLE_RATIO)
    d = defect(word, group_r(word.modulus))
    series = t_series(word, n_max)
    tail = series[len(series) // 2 :]
    return IdentityCheck(2 * d, sum(series), n_max, all(t == 0 for t in tail))


@dataclass(frozen=True)
class BispecialEntry:
    factor: Word
    bilateral: int
    pal_extensions: int
    is_palindrome: bool
    expected: int

    @property
    def conforming(self) -> bool:
        return self.bilateral == self.expected


def bispecial_audit(index: FactorIndex, max_len: int) -> list[BispecialEntry]:
    """Bilateral orders of bispecial factors against the zero-defect pattern
    for plain reversal: palindromic bispecials should have #pal-extensions - 1,
    all others zero."""
    out = []
    for n in range(0, max_len + 1):
        for w in index.special_factors(n).bispecial:
            b = index.bilateral_order(w)
            pext = len(index.palindromic_extensions(w))
            is_pal = w.data == w.data[::-1]
            expected = pext - 1 if is_pal else 0
            out.append(BispecialEntry(w, b, pext, is_pal, expected))
    return out


@dataclass(frozen=True)
class ReturnWordAudit:
    group_label: str
    max_len: int
    orbits_checked: int
    partial_orbits: int
    violations: tuple[tuple[Word, Word], ...]

    @property
    def clean(self) -> bool:
        return not self.violations


def return_word_audit(
    index: FactorIndex, group: SymmetryGroup, max_len: int
) -> ReturnWordAudit:
    """For every palindromic orbit of factor length <= max_len, test whether
    each observed complete return word is itself a group-palindrome."""
    checked = 0
    partial = 0
    violations = []
    m = index.word.modulus
    for n in range(1, max_len + 1):
        seen: set[bytes] = set()
        for b in sorted(index.factor_set(n)):
            if b in seen:
                continue
            w = Word(m, b)
            member_bytes = {e.apply_bytes(b) for e in group.elements}
            seen |= member_bytes
            if not is_group_palindrome(w, group):
                continue
            checked += 1
            ret = index.complete_return_words(w, group)
            if ret.partial:
                partial += 1
            for v in sorted(ret.words):
                if not is_group_palindrome(v, group):
                    violations.append((w, v))
    return ReturnWordAudit(
        group.describe(), max_len, checked, partial, tuple(violations)
    )


@dataclass(frozen=True)
class RichnessVerdict:
    status: str  # "rich-up-to-horizon" | "defect-witness" | "inconclusive"
    horizon: int
    defect_bound: int
    witnesses: tuple[Word, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def rich(self) -> bool:
        return self.status == "rich-up-to-horizon"


def _minimal_defective_factor(word: Word, group: SymmetryGroup, search_cap: int) -> Word | None:
    idx = FactorIndex(word)
    for n in range(1, search_cap + 1):
        for f in idx.factors(n):
            if defect(f, group) > 0:
                return f
    return None


def richness_verdict(
    source: WordSource | Word, group: SymmetryGroup, horizon: int
) -> RichnessVerdict:
    """Defect of the prefix, with a minimal witness when it is positive.

    The verdict is about the prefix: zero defect certifies every factor seen
    so far, while a positive defect is a permanent obstruction because the
    defect of prefixes never decreases.
    """
    word = source if isinstance(source, Word) else source.prefix(horizon)
    word = word[:horizon]
    idx = FactorIndex(word)
    closure_bad = [
        n
        for n in _CLOSURE_SAMPLE
        if n <= len(word) and idx.closure_fraction(group, n) < 1.0
    ]
    if closure_bad:
        return RichnessVerdict(
            "inconclusive",
            len(word),
            0,
            notes=(
                f"prefix language not closed under {group.describe()} "
                f"at lengths {closure_bad}",
            ),
        )
    d = defect(word, group)
    if d == 0:
        return RichnessVerdict("rich-up-to-horizon", len(word), 0)
    # find the shortest defective prefix, then the minimal defective factor
    lo, hi = 1, len(word)
    while lo < hi:
        mid = (lo + hi) // 2
        if defect(word[:mid], group) > 0:
            hi = mid
        else:
            lo = mid + 1
    witness = _minimal_defective_factor(word[:lo], group, search_cap=lo)
    return RichnessVerdict(
        "defect-witness",
        len(word),
        d,
        witnesses=(witness,) if witness is not None else (word[:lo],),
        notes=(f"first defective prefix has length {lo}",),
    )
