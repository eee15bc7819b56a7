"""Registered reproduction experiments.

Each experiment materializes the words it needs, computes the quantities
under test, and returns a Report whose checks say exactly which reference
values were reproduced.  Defaults are sized so the whole catalog runs in a
few minutes; horizons are overridable but guarded against statistically
meaningless settings.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Callable

from .analysis import FactorIndex, welldoc2_check
from .eertree import naive_pal_complexity, naive_pal_factors, pal_complexity, pal_factors
from .gtm import gtm_factor_sets, gtm_tables, q_value
from .report import Report, Series
from .richness import (
    RELIABLE_RATIO,
    analyze_profile,
    bispecial_audit,
    defect,
    defect_profile,
    equality_audit,
    return_word_audit,
    richness_verdict,
    sum_image_transfer,
    t_series,
)
from .symmetry import (
    antimorphism,
    exchange_reversal,
    gamma_psi,
    group_e,
    group_h,
    group_i2_even,
    group_r,
    is_group_palindrome,
    orbit_canonical,
    reversal,
)
from .transform import (
    palindrome_center_classify,
    s_apply,
    s_commutation_check,
    s_preimage_set,
)
from .words import DigitSum, SImage, SPreimage, Word, period_doubling, sturmian, thue_morse


def _require_horizon(horizon: int, minimum: int, why: str) -> None:
    if horizon < minimum:
        raise ValueError(
            f"horizon {horizon} too small: {why} needs at least {minimum}"
        )


def _slack_series(profile, name: str) -> Series:
    return Series(
        name=name,
        index=list(range(1, profile.n_max + 1)),
        values=list(profile.slack),
        horizon=profile.horizon,
        reliable=profile.n_max * RELIABLE_RATIO <= profile.horizon,
    )


# ---------------------------------------------------------------------------
# example-3-1

_EX31_WORD = "011010011001"
_EX31_PAL_R = {"", "0", "1", "11", "00", "101", "010", "0110", "1001", "001100", "10011001"}
_EX31_PAL_E = {"", "01", "10", "0011", "1100", "1010", "110100", "001100", "01101001"}
_EX31_PAL_H_REPS = [
    "", "0", "00", "01", "010", "0110", "0011", "1010",
    "110100", "100110", "001100", "10011001", "01101001",
]


def _all_factors(word: Word) -> list[Word]:
    idx = FactorIndex(word)
    out = [Word(word.modulus)]
    for n in range(1, len(word) + 1):
        out.extend(idx.factors(n))
    return out


def _example_3_1(params: dict, horizon: int) -> Report:
    rep = Report("example-3-1")
    w = thue_morse().prefix(12)
    rep.add_fact("word", str(w))
    rep.check_equal("length-12 prefix of tm(2,2)", str(w), _EX31_WORD)

    r_set = {str(p) for p in pal_factors(w, reversal(2))}
    e_set = {str(p) for p in pal_factors(w, exchange_reversal())}
    h = group_h()
    h_classes = {
        str(orbit_canonical(f, h)) for f in _all_factors(w) if is_group_palindrome(f, h)
    }
    expected_h = {str(orbit_canonical(Word.from_digits(r, 2), h)) for r in _EX31_PAL_H_REPS}

    rep.add_fact("Pal[R] computed", " ".join(sorted(r_set, key=lambda s: (len(s), s))))
    rep.add_fact("Pal[E] computed", " ".join(sorted(e_set, key=lambda s: (len(s), s))))
    rep.add_fact("Pal[E] listed but not found", " ".join(sorted(_EX31_PAL_E - e_set)))
    rep.add_fact("Pal[E] found but not listed", " ".join(sorted(e_set - _EX31_PAL_E)))
    rep.add_fact("H-orbit classes computed", len(h_classes))

    rep.check_equal("reversal-palindrome set matches the reference listing", r_set, _EX31_PAL_R)
    rep.check_equal("exchange-palindrome set matches the reference listing", e_set, _EX31_PAL_E)
    rep.check_equal("H-palindromic orbit classes match the reference listing", h_classes, expected_h)
    rep.check_equal("R-defect equals 2", defect(w, group_r(2)), 2)
    rep.check_equal("E-defect equals 3 (reference value)", defect(w, group_e()), 3)
    rep.check_equal("H-defect equals 0", defect(w, group_h()), 0)
    return rep


# ---------------------------------------------------------------------------
# pd-transfer

def _pd_transfer(params: dict, horizon: int) -> Report:
    n_max = params["n_max"]
    _require_horizon(horizon, RELIABLE_RATIO * n_max, f"slack up to n={n_max}")
    rep = Report("pd-transfer", params={"n_max": n_max, "horizon": horizon})
    tm = thue_morse()
    pd = period_doubling()
    image = SImage(tm)
    rep.check(
        "sum image of tm(2,2) equals the period doubling fixed point",
        image.prefix(horizon) == pd.prefix(horizon),
        f"compared {horizon} letters",
    )
    audit_u = equality_audit(tm, group_h(), n_max, horizon)
    audit_v = equality_audit(pd, group_r(2), n_max, horizon)
    rep.check(
        "tm(2,2) H-slack is zero for all n",
        audit_u.zero_all,
        f"first nonzero: {audit_u.first_nonzero}",
    )
    rep.check(
        "period doubling R-slack is zero for all n",
        audit_v.zero_all,
        f"first nonzero: {audit_v.first_nonzero}",
    )
    rep.check("both languages closed at sampled lengths",
              audit_u.closed_at_samples and audit_v.closed_at_samples)
    transfer = sum_image_transfer(tm, n_max, horizon)
    rep.check(
        "complexity increments transfer with factor 2",
        transfer.delta_ok,
        f"first mismatch at n={transfer.first_delta_mismatch}",
    )
    rep.check(
        "palindrome counts transfer with factor 2",
        transfer.pal_ok,
        f"first mismatch at n={transfer.first_pal_mismatch}",
    )
    rep.add_series(_slack_series(audit_u.profile, "slack[H] tm(2,2)"))
    rep.add_series(_slack_series(audit_v.profile, "slack[R] pd"))
    return rep


# ---------------------------------------------------------------------------
# tb2-rich

def _tb2_rich(params: dict, horizon: int) -> Report:
    n_max = params["n_max"]
    bases = (params["b"],) if params["b"] is not None else (2, 3, 4)
    _require_horizon(horizon, RELIABLE_RATIO * n_max, f"slack up to n={n_max}")
    rep = Report("tb2-rich", params={"b": params["b"], "n_max": n_max, "horizon": horizon})
    for b in bases:
        u = thue_morse(b, 2)
        audit = equality_audit(u, group_h(), n_max, horizon)
        rep.check(
            f"tm({b},2) H-slack is zero for all n <= {n_max}",
            audit.zero_all,
            f"first nonzero: {audit.first_nonzero}",
        )
        verdict = richness_verdict(SImage(u), group_r(2), horizon)
        rep.check(
            f"S(tm({b},2)) has zero R-defect at horizon",
            verdict.rich,
            f"status {verdict.status}, defect bound {verdict.defect_bound}",
        )
        transfer = sum_image_transfer(u, n_max, horizon)
        rep.check(f"tm({b},2) complexity increments transfer with factor 2", transfer.delta_ok)
        rep.check(f"tm({b},2) palindrome counts transfer with factor 2", transfer.pal_ok)
        cu = FactorIndex(u.prefix(horizon)).complexity_profile(n_max + 1)
        cv = FactorIndex(SImage(u).prefix(horizon)).complexity_profile(n_max)
        halved = next((n for n in range(1, n_max + 1) if 2 * cv[n] != cu[n + 1]), None)
        rep.check(
            f"S(tm({b},2)) complexity is half the shifted complexity of tm({b},2)",
            halved is None,
            f"first mismatch at n={halved}",
        )
        rep.add_series(_slack_series(audit.profile, f"slack[H] tm({b},2)"))
    return rep


# ---------------------------------------------------------------------------
# rote-hrich

def _rote_hrich(params: dict, horizon: int) -> Report:
    n_max = params["n_max"]
    window = params["return_window"]
    _require_horizon(horizon, RELIABLE_RATIO * n_max, f"slack up to n={n_max}")
    rep = Report(
        "rote-hrich",
        params={"n_max": n_max, "return_window": window, "horizon": horizon},
    )
    rote_src = SPreimage(sturmian(), 0)
    word = rote_src.prefix(horizon)
    rep.check(
        "sum image of the preimage reproduces the mechanical word",
        s_apply(word) == sturmian().prefix(horizon - 1),
    )
    audit = equality_audit(word, group_h(), n_max)
    rep.check(
        "H-slack is zero for all n",
        audit.zero_all,
        f"first nonzero: {audit.first_nonzero}",
    )
    rep.check("language closed under H at sampled lengths", audit.closed_at_samples)
    idx = FactorIndex(word)
    ret = return_word_audit(idx, group_h(), window)
    rep.check(
        f"complete H-return words of H-palindromes are H-palindromes (|w| <= {window})",
        ret.clean,
        f"{len(ret.violations)} violations, {ret.orbits_checked} orbits checked",
    )
    transfer = sum_image_transfer(rote_src, n_max, horizon)
    rep.check("complexity increments transfer with factor 2", transfer.delta_ok)
    rep.check("palindrome counts transfer with factor 2", transfer.pal_ok)
    rep.add_series(_slack_series(audit.profile, "slack[H] rote"))
    return rep


# ---------------------------------------------------------------------------
# tm-not-rrich

_TM_DEFECT_SCHEDULE = (16, 32, 64, 128, 256, 512, 1024)


def _tm_not_rrich(params: dict, horizon: int) -> Report:
    _require_horizon(horizon, 2 * _TM_DEFECT_SCHEDULE[-1], "the defect schedule")
    rep = Report("tm-not-rrich", params={"horizon": horizon})
    tm = thue_morse()
    profile = defect_profile(tm, group_r(2), _TM_DEFECT_SCHEDULE)
    values = [d for _, d in profile]
    rep.add_series(
        Series("R-defect", [n for n, _ in profile], values, index_name="prefix")
    )
    rep.check("R-defect is positive at every sampled prefix", all(d > 0 for d in values))
    rep.check(
        "R-defect grows along the schedule",
        all(a <= b for a, b in zip(values, values[1:])) and values[-1] > values[0],
        f"profile {profile}",
    )
    w12 = tm.prefix(12)
    rep.check_equal("the length-12 prefix already has R-defect 2", defect(w12, group_r(2)), 2)

    word = tm.prefix(horizon)
    series = t_series(word, 20)
    first_pos = next((n for n, t in enumerate(series, start=1) if t > 0), None)
    rep.add_series(Series("T[R]", list(range(1, 21)), series, horizon=len(word)))
    rep.check(
        "reversal-equality slack is positive for some n <= 20",
        first_pos is not None,
        f"first positive at n={first_pos}",
    )
    idx = FactorIndex(word)
    entries = bispecial_audit(idx, max_len=20)
    bad = [e for e in entries if not e.conforming]
    rep.check(
        "non-palindromic bispecial factors with positive bilateral order exist",
        any(not e.is_palindrome and e.bilateral != 0 for e in entries),
        f"{len(bad)} non-conforming bispecial factors up to length 20",
    )
    return rep


# ---------------------------------------------------------------------------
# welldoc-sturmian

def _welldoc_sturmian(params: dict, horizon: int) -> Report:
    max_len = params["max_len"]
    _require_horizon(horizon, RELIABLE_RATIO * max_len, f"occurrences up to n={max_len}")
    rep = Report("welldoc-sturmian", params={"max_len": max_len, "horizon": horizon})
    word = sturmian().prefix(horizon)
    results = welldoc2_check(word, max_len)
    incomplete = [r for r in results if not r.complete]
    rep.add_fact("factors checked", len(results))
    rep.check(
        f"all residue classes mod 2 occur before occurrences of every factor (n <= {max_len})",
        not incomplete,
        f"{len(incomplete)} factors incomplete",
    )
    return rep


# ---------------------------------------------------------------------------
# asijo

def _asijo(params: dict, horizon: int) -> Report:
    k, b = params["k"], params["b"]
    if not 1 <= k <= 6:
        raise ValueError("k must lie in 1..6")
    _require_horizon(horizon, 1000, "defect at the horizon")
    rep = Report("asijo", params={"k": k, "b": b, "horizon": horizon})
    src = thue_morse(b, 2)
    for j in range(1, k + 1):
        src = SImage(src)
        verdict = richness_verdict(src, group_r(2), horizon)
        rep.add_fact(f"S^{j} status", verdict.status)
        rep.check(
            f"S^{j}(tm({b},2)) has zero R-defect at horizon (hypothesis)",
            verdict.rich,
            f"defect bound {verdict.defect_bound}",
        )
    return rep


# ---------------------------------------------------------------------------
# asijojednou

def _asijojednou(params: dict, horizon: int) -> Report:
    k, n_max = params["k"], params["n_max"]
    if not 1 <= k <= 8:
        raise ValueError("k must lie in 1..8")
    _require_horizon(horizon, RELIABLE_RATIO * n_max, f"slack up to n={n_max}")
    rep = Report("asijojednou", params={"k": k, "n_max": n_max, "horizon": horizon})
    src = sturmian()
    for j in range(1, k + 1):
        src = SPreimage(src, 0)
        prof_h = analyze_profile(src, group_h(), n_max, horizon)
        prof_r = analyze_profile(src, group_r(2), n_max, horizon)
        dc = prof_h.delta_complexity
        expected = [2 ** (n - 1) if n <= j else 2**j for n in range(1, n_max + 1)]
        rep.check_equal(
            f"preimage depth {j}: complexity increments are 2^(n-1) then 2^{j}",
            dc[: n_max],
            expected,
        )
        rep.check_equal(
            f"preimage depth {j}: language closed under H at n=8",
            prof_h.closure.get(8),
            1.0,
        )
        h_zero, r_zero = prof_h.zero_slack_through(), prof_r.zero_slack_through()
        if j <= 2:
            rep.check(
                f"preimage depth {j}: zero H-slack and zero R-slack",
                h_zero and r_zero,
                f"H first nonzero {prof_h.first_nonzero_slack()}, "
                f"R first nonzero {prof_r.first_nonzero_slack()}",
            )
        elif j == 3:
            rep.check(
                f"preimage depth {j}: zero H-slack but positive R-slack",
                h_zero and not r_zero,
                f"R first nonzero {prof_r.first_nonzero_slack()}",
            )
        else:
            rep.check(
                f"preimage depth {j}: positive H-slack and positive R-slack",
                not h_zero and not r_zero,
                f"H first nonzero {prof_h.first_nonzero_slack()}, "
                f"R first nonzero {prof_r.first_nonzero_slack()}",
            )
        rep.add_series(_slack_series(prof_h, f"slack[H] depth {j}"))
        rep.add_series(_slack_series(prof_r, f"slack[R] depth {j}"))
        rep.add_series(
            Series(f"dC depth {j}", list(range(1, n_max + 1)), dc[:n_max], horizon=prof_h.horizon)
        )
    return rep


# ---------------------------------------------------------------------------
# gtm-tables

def _gtm_tables(params: dict, horizon: int) -> Report:
    b, m = params["b"], params["m"]
    _require_horizon(horizon, 10_000, "factor enumeration")
    rep = Report("gtm-tables", params={"b": b, "m": m, "horizon": horizon})
    tab = gtm_tables(b, m)
    group = group_i2_even(m)
    rep.add_fact("q", tab.q)
    rep.add_fact("group order", tab.group_order)
    rep.check_equal("group order matches the even-shift subgroup", tab.group_order, len(group))

    t_word = DigitSum(b, m).prefix(horizon)
    v_word = s_apply(t_word)
    idx = FactorIndex(v_word)
    c_rows = tuple(idx.complexity(n) for n in (1, 2, 3))
    f_rows = []
    for n in (1, 2, 3):
        fixed = 0
        for data in idx.factor_set(n):
            if any(psi.apply_bytes(data) == data for psi in group.antimorphisms):
                fixed += 1
        f_rows.append(fixed)
    f_rows = tuple(f_rows)
    rep.add_series(Series("C enumerated", [1, 2, 3], list(c_rows), horizon=len(v_word)))
    rep.add_series(Series("C closed form", [1, 2, 3], list(tab.complexity_rows)))
    rep.add_series(Series("F enumerated", [1, 2, 3], list(f_rows), horizon=len(v_word)))
    rep.add_series(Series("F closed form", [1, 2, 3], list(tab.palindrome_rows)))
    rep.check_equal("factor counts match the closed form", c_rows, tab.complexity_rows)
    rep.check_equal("group-palindrome counts match the closed form", f_rows, tab.palindrome_rows)

    summary = tab.summary
    enum_summary = {
        "dc1": c_rows[1] - c_rows[0],
        "f1+f2": f_rows[0] + f_rows[1],
        "dc2": c_rows[2] - c_rows[1],
        "f2+f3": f_rows[1] + f_rows[2],
        "group_order": len(group),
    }
    rep.check_equal("summary row matches the closed form", enum_summary, summary)
    for key, value in summary.items():
        rep.add_fact(key, value)
    if m % 2 == 1 or b % 2 == 1:
        rep.check_equal(
            "slack rows vanish (odd-parity column)", tab.slack_rows, (0, 0)
        )
    else:
        # the whole deficit sits at n = 1 and scales with q - 2
        rep.check_equal(
            "slack rows are (m(q-2)/2, 0) (even-even column)",
            tab.slack_rows,
            (m * (tab.q - 2) // 2, 0),
        )

    t_idx = FactorIndex(t_word)
    for n in (2, 3, 4):
        enum_set = {Word(m, d) for d in t_idx.factor_set(n)}
        closed = gtm_factor_sets(b, m, n)
        rep.check_equal(
            f"length-{n} factors of the digit-sum word match the closed form",
            len(enum_set ^ closed),
            0,
        )
    return rep


# ---------------------------------------------------------------------------
# s-tbm-rich

def _s_tbm_rich(params: dict, horizon: int) -> Report:
    b, m, n_max = params["b"], params["m"], params["n_max"]
    if b < 2 or m < 2:
        raise ValueError("need b >= 2 and m >= 2")
    _require_horizon(horizon, RELIABLE_RATIO * n_max, f"slack up to n={n_max}")
    rep = Report(
        "s-tbm-rich", params={"b": b, "m": m, "n_max": n_max, "horizon": horizon}
    )
    group = group_i2_even(m)
    prof = analyze_profile(SImage(DigitSum(b, m)), group, n_max, horizon)
    rep.add_fact("group", prof.group_label)
    rep.add_fact("letters", "".join(map(str, prof.letters)))
    rep.add_series(_slack_series(prof, f"slack[{prof.group_label}]"))
    rep.check(
        "language closed under the group at sampled lengths",
        all(f == 1.0 for f in prof.closure.values()),
        f"closure {prof.closure}",
    )
    rep.check(
        "slack vanishes for n >= 3",
        all(s == 0 for s in prof.slack[2:]),
        f"first nonzero beyond 2: "
        f"{next(((n, s) for n, s in enumerate(prof.slack[2:], start=3) if s), None)}",
    )
    if m % 2 == 1 or b % 2 == 1:
        rep.check(
            "slack vanishes for all n (m or b odd)",
            prof.zero_slack_through(),
            f"first nonzero: {prof.first_nonzero_slack()}",
        )
    elif q_value(b, m) > 2:
        rep.check(
            "slack is positive for some n <= 2 (m and b even, q > 2)",
            any(s > 0 for s in prof.slack[:2]),
            f"slack rows {prof.slack[:2]}",
        )
    else:
        rep.check(
            "slack vanishes for all n (m and b even, degenerate q = 2)",
            prof.zero_slack_through(),
            f"first nonzero: {prof.first_nonzero_slack()}",
        )
    return rep


# ---------------------------------------------------------------------------
# s4

def _s4(params: dict, horizon: int) -> Report:
    b, n_max = params["b"], params["n_max"]
    if b < 1:
        raise ValueError("need b >= 1")
    base = 2 * b + 1
    _require_horizon(horizon, RELIABLE_RATIO * n_max, f"slack up to n={n_max}")
    rep = Report("s4", params={"b": b, "n_max": n_max, "horizon": horizon})
    v1 = SImage(DigitSum(base, 4))
    prof1 = analyze_profile(v1, group_i2_even(4), n_max, horizon)
    rep.check_equal(f"S(tm({base},4)) uses the letters 1 and 3", prof1.letters, (1, 3))
    rep.check(
        f"S(tm({base},4)) has zero slack for the two-antimorphism group",
        prof1.zero_slack_through(),
        f"first nonzero: {prof1.first_nonzero_slack()}",
    )
    v2 = SImage(v1)
    prof2 = analyze_profile(v2, group_r(4), n_max, horizon)
    rep.check_equal(f"S^2(tm({base},4)) uses the letters 0 and 2", prof2.letters, (0, 2))
    rep.check(
        f"S^2(tm({base},4)) has zero reversal slack",
        prof2.zero_slack_through(),
        f"first nonzero: {prof2.first_nonzero_slack()}",
    )
    v3 = SImage(v2)
    prof3 = analyze_profile(v3, group_r(4), n_max, horizon)
    rep.check_equal(f"S^3(tm({base},4)) uses the letters 0 and 2", prof3.letters, (0, 2))
    rep.check(
        f"S^3(tm({base},4)) has zero reversal slack (hypothesis at horizon)",
        prof3.zero_slack_through(),
        f"first nonzero: {prof3.first_nonzero_slack()}",
    )
    rep.add_series(_slack_series(prof1, "slack depth 1"))
    rep.add_series(_slack_series(prof2, "slack depth 2"))
    rep.add_series(_slack_series(prof3, "slack depth 3"))
    return rep


# ---------------------------------------------------------------------------
# oracle-suite

def _oracle_suite(params: dict, horizon: int) -> Report:
    rep = Report("oracle-suite")

    viol_r = viol_e = 0
    for length in range(1, 15):
        for tup in product((0, 1), repeat=length):
            w = Word(2, tup)
            if len(naive_pal_factors(w, reversal(2))) > length + 1:
                viol_r += 1
            if len(naive_pal_factors(w, exchange_reversal())) > length:
                viol_e += 1
    rep.check_equal("reversal-palindrome bound |w|+1 on binary words up to 14", viol_r, 0)
    rep.check_equal("exchange-palindrome bound |w| on binary words up to 14", viol_e, 0)

    viol_psi = 0
    for m in (3, 4):
        psis = [antimorphism(m, x) for x in range(m)]
        for length in range(1, 9):
            for tup in product(range(m), repeat=length):
                w = Word(m, tup)
                for psi in psis:
                    bound = length + 1 - gamma_psi(w, psi)
                    if len(naive_pal_factors(w, psi)) > bound:
                        viol_psi += 1
    rep.check_equal(
        "pseudopalindrome bound |w|+1-gamma on Z_3 and Z_4 words up to 8", viol_psi, 0
    )

    rng = random.Random(20260815)
    mismatches = 0
    for m in (2, 3, 4, 6):
        for _ in range(100):
            length = rng.randint(1, 500)
            w = Word(m, bytes(rng.randrange(m) for _ in range(length)))
            for x in range(m):
                psi = antimorphism(m, x)
                if pal_complexity(w, psi) != naive_pal_complexity(w, psi):
                    mismatches += 1
    rep.check_equal(
        "incremental palindrome index agrees with the naive scan (400 random words)",
        mismatches,
        0,
    )

    bad_pre = 0
    for m in (2, 3, 4):
        top = 12 if m == 2 else 6
        for length in range(0, top + 1):
            for tup in product(range(m), repeat=length):
                v = Word(m, tup)
                pres = s_preimage_set(v)
                firsts = [u[0] for u in pres]
                if firsts != list(range(m)):
                    bad_pre += 1
                    continue
                if any(s_apply(u) != v or len(u) != length + 1 for u in pres):
                    bad_pre += 1
    rep.check_equal("every word has exactly m sum-preimages, one per first letter", bad_pre, 0)

    bad_comm = 0
    for m in (2, 3, 4):
        top = 12 if m == 2 else 5
        for length in range(1, top + 1):
            for tup in product(range(m), repeat=length):
                w = Word(m, tup)
                for y in range(m):
                    if not s_commutation_check(w, y):
                        bad_comm += 1
    rep.check_equal("sum operator conjugates psi_y into psi_2y", bad_comm, 0)

    bad_center = 0
    for length in range(1, 13):
        for tup in product((0, 1), repeat=length):
            w = Word(2, tup)
            c = palindrome_center_classify(w)
            if c.kind == "exchange":
                ok = (
                    length % 2 == 0
                    and c.image_is_palindrome
                    and c.image_center == 1
                )
            elif c.kind == "reversal-even":
                ok = (
                    length % 2 == 0
                    and c.image_is_palindrome
                    and c.image_center == 0
                )
            elif c.kind == "reversal-odd":
                ok = length % 2 == 1 and c.image_is_palindrome
            else:
                ok = True
            if not ok:
                bad_center += 1
    rep.check_equal(
        "palindrome centers map to the predicted image shapes (binary words up to 12)",
        bad_center,
        0,
    )
    return rep


# ---------------------------------------------------------------------------
# registry

@dataclass(frozen=True)
class Experiment:
    name: str
    summary: str
    defaults: dict
    default_horizon: int
    runner: Callable[[dict, int], Report]


EXPERIMENTS: dict[str, Experiment] = {
    e.name: e
    for e in [
        Experiment(
            "example-3-1",
            "defects and palindrome sets of the length-12 binary prefix",
            {},
            12,
            _example_3_1,
        ),
        Experiment(
            "pd-transfer",
            "sum image of tm(2,2) vs the period doubling word, with equality audits",
            {"n_max": 50},
            20_000,
            _pd_transfer,
        ),
        Experiment(
            "tb2-rich",
            "H-richness of tm(b,2) and R-richness of its sum image",
            {"b": None, "n_max": 100},
            100_000,
            _tb2_rich,
        ),
        Experiment(
            "rote-hrich",
            "H equality and return-word audits for the preimage of the mechanical word",
            {"n_max": 100, "return_window": 20},
            100_000,
            _rote_hrich,
        ),
        Experiment(
            "tm-not-rrich",
            "growing R-defect of tm(2,2) with bispecial witnesses",
            {},
            10_000,
            _tm_not_rrich,
        ),
        Experiment(
            "welldoc-sturmian",
            "well-distributed occurrences mod 2 for short mechanical-word factors",
            {"max_len": 6},
            100_000,
            _welldoc_sturmian,
        ),
        Experiment(
            "asijo",
            "iterated sum images of tm(b,2) keep zero R-defect (hypothesis)",
            {"k": 4, "b": 2},
            100_000,
            _asijo,
        ),
        Experiment(
            "asijojednou",
            "iterated sum preimages of the mechanical word: complexity and slack pattern",
            {"k": 4, "n_max": 12},
            100_000,
            _asijojednou,
        ),
        Experiment(
            "gtm-tables",
            "closed-form factor and palindrome tables for sum images of digit-sum words",
            {"b": 3, "m": 4},
            200_000,
            _gtm_tables,
        ),
        Experiment(
            "s-tbm-rich",
            "equality audit of the sum image of a digit-sum word for the even-shift group",
            {"b": 3, "m": 4, "n_max": 50},
            100_000,
            _s_tbm_rich,
        ),
        Experiment(
            "s4",
            "binary-alphabet claims for iterated sum images of tm(2b+1,4)",
            {"b": 1, "n_max": 50},
            100_000,
            _s4,
        ),
        Experiment(
            "oracle-suite",
            "exhaustive bounds and optimized-vs-naive cross-checks",
            {},
            0,
            _oracle_suite,
        ),
    ]
}


def experiment_names() -> list[str]:
    return sorted(EXPERIMENTS)


def run_experiment(
    name: str, params: dict | None = None, horizon: int | None = None
) -> Report:
    """Look up a registered experiment, validate its parameters, and run it."""
    if name not in EXPERIMENTS:
        known = ", ".join(experiment_names())
        raise ValueError(f"unknown experiment {name!r}; known: {known}")
    exp = EXPERIMENTS[name]
    merged = dict(exp.defaults)
    for key, value in (params or {}).items():
        if key not in exp.defaults:
            allowed = ", ".join(sorted(exp.defaults)) or "none"
            raise ValueError(
                f"experiment {name!r} takes no parameter {key!r} (allowed: {allowed})"
            )
        merged[key] = int(value)
    report = exp.runner(merged, exp.default_horizon if horizon is None else horizon)
    report.params.setdefault("experiment", name)
    return report
