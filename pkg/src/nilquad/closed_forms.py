"""Closed forms of the composition minimax for the 4-step and 5-step cases.

The optimum over compositions collapses to explicit formulas when there
are three or four parts: a two-branch golden-ratio expression for k = 4
and a residue split mod 6 for k = 5.  Ceilings of the quadratic
irrationals involved are razor-thin (they decide equality with the
Golod-Shafarevich ceiling), so every comparison goes through integer
square roots; no floats appear anywhere in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class QuadIrrationalCeil:
    """Exact ceiling of (p*m + q*sqrt(s*m^e)) / r at integer arguments m.

    Requires q != 0, r > 0 and a radicand that is never a perfect square
    (true for s = 5 and m >= 1), so the value is irrational and the
    ceiling is unambiguous: with f = floor(q*sqrt(s*m^e)) the result is
    (p*m + f) // r + 1.
    """

    p: int
    q: int
    r: int
    s: int
    e: int

    def __post_init__(self):
        if self.q == 0 or self.r <= 0:
            raise ValueError("need q != 0 and r > 0")

    def ceil_at(self, m: int) -> int:
        if m < 1:
            raise ValueError(f"argument must be positive, got {m}")
        radicand = self.q * self.q * self.s * m**self.e
        root = math.isqrt(radicand)
        if root * root == radicand:
            raise ValueError(f"radicand {radicand} is a perfect square")
        sqrt_floor = root if self.q > 0 else -root - 1
        return (self.p * m + sqrt_floor) // self.r + 1


#: ceil(m * (sqrt(5) - 1) / 2), i.e. m over the golden ratio.
_CEIL_INV_GOLDEN = QuadIrrationalCeil(p=-1, q=1, r=2, s=5, e=2)

#: ceil(m * (3 - sqrt(5)) / 2), the 4-step threshold ratio times m.
_CEIL_K4_RATIO = QuadIrrationalCeil(p=3, q=-1, r=2, s=5, e=2)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def minimax_k4(n: int) -> int:
    """Exact 4-step minimum: min(ceil(n(sqrt5-1)/2)^2, n*ceil(n(3-sqrt5)/2))."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    square_branch = _CEIL_INV_GOLDEN.ceil_at(n) ** 2
    multiple_branch = n * _CEIL_K4_RATIO.ceil_at(n)
    return min(square_branch, multiple_branch)


def minimax_k4_single_cut(n: int) -> int:
    """Independent route for the 4-step minimum: a one-parameter scan.

    With a symmetric composition (a, n - 2a + ..., a) the cost reduces to
    max(n*a, (n-a)^2) over 0 <= a <= n/2.  Used as a cross-check only.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return min(max(n * a, (n - a) ** 2) for a in range(n // 2 + 1))


def minimax_k5(n: int) -> int:
    """Exact 5-step minimum, split on n mod 6.

    Even n: (n/2) * ceil(2n/3).  n = 5 mod 6: n * ceil(n(n+1)/(3n+1)).
    n = 1 or 3 mod 6: ((n+1)/2) * ceil(2n^2/(3n+1)).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n % 2 == 0:
        return (n // 2) * _ceil_div(2 * n, 3)
    if n % 6 == 5:
        return n * _ceil_div(n * (n + 1), 3 * n + 1)
    return ((n + 1) // 2) * _ceil_div(2 * n * n, 3 * n + 1)


def gs_ceiling_k4(n: int) -> int:
    """ceil(n^2 * (3 - sqrt(5)) / 2) via the integer square root of 5 n^4."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return _CEIL_K4_RATIO.ceil_at(n * n)


def meets_gs_bound_k4(n: int) -> bool:
    """Whether the exact 4-step minimum equals the bound ceiling.

    Coincides with Fibonacci membership of n (verified as a property).
    """
    return minimax_k4(n) == gs_ceiling_k4(n)


def meets_gs_bound_k5(n: int) -> bool:
    """Whether the exact 5-step minimum equals ceil(n^2 / 3).

    Holds exactly for n in {1, 2, 4} or 6 | n (verified as a property).
    n = 4 is easy to overlook: the 5-step minimum exceeds n^2/3 by n/6
    in the n = 4 mod 6 branch, which stays below the ceiling gap of 2/3
    only for n = 4 itself, where both sides equal 6.
    """
    return minimax_k5(n) == _ceil_div(n * n, 3)


def is_fibonacci(n: int) -> tuple[bool, int | None]:
    """Exact golden-ratio interval test for Fibonacci membership.

    n >= 1 is a Fibonacci number iff the open interval
    (phi*n - 1/n, phi*n + 1/n), phi = (1 + sqrt 5)/2, contains an integer
    m; that m is then the next Fibonacci number (Moebius' criterion).

    Integer form: with u = 2m - n,

        |m - phi*n| < 1/n  <=>  |u - n*sqrt(5)| < 2/n
                           <=>  u*n - 2 < n^2*sqrt(5) < u*n + 2.

    Candidates satisfy u >= 2n - 1, so u*n + 2 > 0 and the right side
    squares to 5 n^4 < (u n + 2)^2; the left side holds outright when
    u*n <= 2 and otherwise squares to (u n - 2)^2 < 5 n^4.  5 n^4 is never
    a perfect square, so both inequalities are strict and exact.

    Only m in {floor((n + isqrt(5 n^2)) / 2), that + 1} can lie in the
    interval.  For n = 1 both 1 and 2 do; the successor 2 is returned.

    Returns (True, next_fibonacci) or (False, None).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    five_n4 = 5 * n**4
    base = (n + math.isqrt(5 * n * n)) // 2
    hits = []
    for m in (base, base + 1):
        un = (2 * m - n) * n
        left_ok = un <= 2 or (un - 2) ** 2 < five_n4
        right_ok = un + 2 > 0 and five_n4 < (un + 2) ** 2
        if left_ok and right_ok:
            hits.append(m)
    if not hits:
        return False, None
    return True, max(hits)
