"""Closed-form factor counts for digit-sum words and their sum images.

For the word t over Z_m whose k-th letter is the base-b digit sum of k,
write q for the least positive integer with q(b-1) = 0 mod m, i.e.
q = m / gcd(b-1, m).  The short factor sets of t and the first three rows
of the complexity table C(n) and palindrome table F(n) of the sum image
v = S(t) have closed forms that split by the parities of b and m.  F(n)
sums, over the antimorphisms psi of the even-shift symmetry subgroup, the
number of length-n factors of v fixed by psi; no factor is fixed by two of
them, so F(n) is a plain count of group-palindromic factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .words import Word


def q_value(base: int, modulus: int) -> int:
    """Least q >= 1 with q * (base - 1) divisible by the modulus."""
    return modulus // math.gcd(base - 1, modulus)


@dataclass(frozen=True)
class GtmTables:
    base: int
    modulus: int
    q: int
    complexity_rows: tuple[int, int, int]  # C(1), C(2), C(3) of the sum image
    palindrome_rows: tuple[int, int, int]  # F(1), F(2), F(3) of the sum image
    group_order: int  # order of the even-shift symmetry subgroup

    @property
    def summary(self) -> dict[str, int]:
        c1, c2, c3 = self.complexity_rows
        f1, f2, f3 = self.palindrome_rows
        return {
            "dc1": c2 - c1,
            "f1+f2": f1 + f2,
            "dc2": c3 - c2,
            "f2+f3": f2 + f3,
            "group_order": self.group_order,
        }

    @property
    def slack_rows(self) -> tuple[int, int]:
        s = self.summary
        return (
            s["dc1"] + s["group_order"] - s["f1+f2"],
            s["dc2"] + s["group_order"] - s["f2+f3"],
        )


def gtm_tables(base: int, modulus: int) -> GtmTables:
    """Closed-form first rows of the counting tables for the sum image."""
    if base < 3 or modulus < 3:
        raise ValueError("closed-form tables need base >= 3 and modulus >= 3")
    b, m = base, modulus
    q = q_value(b, m)
    if m % 2 == 1:
        c_rows = (m, q * m, 3 * q * m - 2 * m)
        f_rows = (m, q * m, q * m)
        order = 2 * m
    elif b % 2 == 1:
        c_rows = (m // 2, q * m // 2, 3 * q * m // 2 - m)
        f_rows = (m // 2, q * m // 2, q * m // 2)
        order = m
    else:
        c_rows = (m, 3 * q * m // 4, 3 * q * m // 2 - m)
        f_rows = (m, q * m // 4, q * m // 2)
        order = m
    return GtmTables(b, m, q, c_rows, f_rows, order)


def gtm_factor_sets(base: int, modulus: int, n: int) -> set[Word]:
    """Closed-form set of the length-n factors of the digit-sum word itself.

    Valid for n in {2, 3} with any base >= 2; length 4 additionally needs
    base >= 3 so that a window never straddles two block seams.
    """
    if n not in (2, 3, 4):
        raise ValueError("closed forms cover lengths 2, 3 and 4")
    if base < 2 or modulus < 2:
        raise ValueError("need base >= 2 and modulus >= 2")
    if n == 4 and base < 3:
        raise ValueError("length-4 closed form needs base >= 3")
    b, m = base, modulus
    q = q_value(b, m)
    step = b - 1

    def rho(x: int, k: int) -> int:
        return (x + k * step) % m

    out: set[bytes] = set()
    for r in range(m):
        for k in range(q):
            if n == 2:
                out.add(bytes([rho(r - 1, k), r]))
            elif n == 3:
                out.add(bytes([rho(r - 1, k), r, (r + 1) % m]))
                out.add(bytes([(r - 1) % m, r, rho(r + 1, -k)]))
            else:
                out.add(bytes([rho(r - 1, k), r, (r + 1) % m, (r + 2) % m]))
                out.add(bytes([(r - 2) % m, (r - 1) % m, r, rho(r + 1, -k)]))
                mid = rho(r + 1, -k)
                out.add(bytes([(r - 1) % m, r, mid, (mid + 1) % m]))
    return {Word(m, bts) for bts in out}
