"""Golod-Shafarevich lower bound for quadratic algebras, computed exactly.

An algebra on n generators with d quadratic relations has graded dimensions
bounded below, coefficient by coefficient, by |(1 - n t + d t^2)^{-1}|,
where |.| truncates a power series at its first non-positive coefficient.
Everything here is driven by the integer recurrence

    c_0 = 1,  c_1 = n,  c_m = n c_{m-1} - d c_{m-2},

so threshold questions ("does the bound permit a zero component at degree
k?") are decided without any floating point.  The real-valued threshold
ratio 1 / (4 cos^2(pi/(k+1))) is computed to high precision for display
and cross-checks only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

#: Decimal digits carried by high-precision threshold values.
PRECISION_DPS = 50

#: Private mpmath context; configured once here and only read afterwards,
#: so library calls never touch the global context (thread safety).
_MP = mpmath.mp.clone()
_MP.dps = PRECISION_DPS

#: Thresholds with an exact rational value (the only k for which
#: cos^2(pi/(k+1)) is rational): k -> d/n^2 ratio.
_EXACT_THRESHOLDS = {2: Fraction(1), 3: Fraction(1, 2), 5: Fraction(1, 3)}


@dataclass(frozen=True)
class TruncatedSeries:
    """Positive initial coefficients of |(1 - n t + d t^2)^{-1}|.

    ``complete`` is True when the truncation rule fired (the next
    coefficient of the raw expansion would be <= 0) and False when the
    series was cut by the requested degree cap instead.
    """

    coeffs: tuple[int, ...]
    complete: bool

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("series must start with coefficient 1")
        if any(c <= 0 for c in self.coeffs):
            raise ValueError("stored coefficients must be strictly positive")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, m: int) -> int:
        """Coefficient of t^m; zero past the stored range only if complete."""
        if m < len(self.coeffs):
            return self.coeffs[m]
        if self.complete:
            return 0
        raise IndexError(f"degree {m} beyond the computed cap {self.degree}")


@dataclass(frozen=True)
class GsParams:
    """Validated (generators, relations, nilpotency step) triple."""

    n: int
    d: int
    k: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")
        if not 0 <= self.d <= self.n * self.n:
            raise ValueError(
                f"d must lie in [0, n^2] = [0, {self.n * self.n}], got {self.d}"
            )
        if self.k < 2:
            raise ValueError(f"k must be at least 2, got {self.k}")


@dataclass(frozen=True)
class GsThreshold:
    """Minimal ratio d/n^2 at which the bound permits k-step nilpotency."""

    k: int
    value: mpmath.mpf
    exact: Fraction | None

    def __float__(self) -> float:
        return float(self.value)


def gs_threshold(k: int) -> GsThreshold:
    """Return 1 / (4 cos^2(pi/(k+1))) carrying >= 30 significant digits.

    The ``exact`` field holds the rational value when one exists
    (k = 2, 3, 5 give 1, 1/2, 1/3).
    """
    if k < 2:
        raise ValueError(f"threshold defined for k >= 2, got {k}")
    value = 1 / (4 * _MP.cos(_MP.pi / (k + 1)) ** 2)
    return GsThreshold(k=k, value=value, exact=_EXACT_THRESHOLDS.get(k))


def gs_series(n: int, d: int, max_degree: int) -> TruncatedSeries:
    """Exact bound series for (n, d), truncated at ``max_degree``.

    Runs the coefficient recurrence with exact integers and stops either
    at the first non-positive value (complete=True, that value is not
    stored) or at the degree cap (complete=False).
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if d < 0 or d > n * n:
        raise ValueError(f"d must lie in [0, n^2] = [0, {n * n}], got {d}")
    if max_degree < 0:
        raise ValueError(f"max_degree must be non-negative, got {max_degree}")
    coeffs = [1]
    complete = False
    if max_degree >= 1:
        c_prev, c_curr = 1, n
        if c_curr <= 0:
            complete = True
        else:
            coeffs.append(c_curr)
            for _ in range(2, max_degree + 1):
                c_prev, c_curr = c_curr, n * c_curr - d * c_prev
                if c_curr <= 0:
                    complete = True
                    break
                coeffs.append(c_curr)
    return TruncatedSeries(tuple(coeffs), complete)


def gs_permits_nilpotency(n: int, d: int, k: int) -> bool:
    """Whether the bound series is a polynomial of degree < k.

    Decided exactly: true iff some coefficient c_m with m <= k is
    non-positive.  Equivalent to d >= threshold * n^2 for k >= 2; the
    equivalence is verified as a test property, not used here.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    return gs_series(n, d, max_degree=k).complete


def gs_min_relations(n: int, k: int) -> int:
    """Smallest d in [0, n^2] whose bound series collapses by degree k.

    Binary search over d; monotonicity of gs_permits_nilpotency in d is
    verified exhaustively against a linear scan in the test suite.  The
    result equals ceil(threshold * n^2), but is never derived from the
    real-valued threshold.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    lo, hi = 0, n * n
    # d = n^2 always permits: c_2 = n^2 - d = 0.
    while lo < hi:
        mid = (lo + hi) // 2
        if gs_permits_nilpotency(n, mid, k):
            hi = mid
        else:
            lo = mid + 1
    return lo
