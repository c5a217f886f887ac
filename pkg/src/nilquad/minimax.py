"""Exact minimisation of the worst block product over integer compositions.

Writing n = a_1 + ... + a_{k-1} with non-negative integer parts and prefix
sums b_j = a_1 + ... + a_j, the cost of a composition is

    max over 1 <= j <= k-1 of  b_j * (n - b_{j-1}),

the largest of the k-1 "cut products" (a_j is counted in both factors).
The minimum cost over all compositions is the number of relations needed
by the chain-supported construction.  This module computes that minimum
exactly by dynamic programming over prefix sums, provides a brute-force
enumerator as an independent oracle, and builds the near-optimal
composition coming from the fixed-ratio cut points
alpha_0 = 0, alpha_j = threshold / (1 - alpha_{j-1}).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from nilquad.gsbound import _MP, gs_threshold

#: Refuse brute force beyond this many compositions.
BRUTE_FORCE_CAP = 10**7

#: Matrix DP layers above this prefix-sum range fall back to row-at-a-time
#: transitions to keep memory linear.
_MATRIX_LIMIT = 1024

#: Distance from an integer below which a floating cut point is treated as
#: ambiguous and both roundings are costed exactly.
_HALF_INTEGER_GUARD = 1e-9


@dataclass(frozen=True)
class Composition:
    """Ordered non-negative integer parts; prefix sums are derived."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(a) for a in self.parts))
        if not self.parts:
            raise ValueError("composition needs at least one part")
        if any(a < 0 for a in self.parts):
            raise ValueError(f"parts must be non-negative, got {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def prefix(self) -> tuple[int, ...]:
        """Prefix sums (b_0, b_1, ..., b_{k-1}) with b_0 = 0."""
        sums = [0]
        for a in self.parts:
            sums.append(sums[-1] + a)
        return tuple(sums)

    def reversed(self) -> "Composition":
        return Composition(self.parts[::-1])


@dataclass(frozen=True)
class MinimaxResult:
    """Optimal cost, a witness composition attaining it, and its products."""

    value: int
    witness: Composition
    per_j_costs: tuple[int, ...]

    def __post_init__(self):
        if self.value != max(self.per_j_costs):
            raise ValueError("value must equal the largest per-cut product")


@dataclass(frozen=True)
class AlphaSequence:
    """Cut-point ratios 0 = alpha_0 < ... < alpha_{k-1} = 1.

    Consecutive values satisfy alpha_j * (1 - alpha_{j-1}) = threshold(k).
    Values are exact Fractions when the threshold is rational (k = 2, 3, 5)
    and high-precision reals otherwise.
    """

    k: int
    values: tuple
    exact: bool


def composition_cost(comp: Composition | Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Cost of a composition: (max cut product, all cut products)."""
    if not isinstance(comp, Composition):
        comp = Composition(tuple(comp))
    b = comp.prefix
    n = b[-1]
    costs = tuple(b[j] * (n - b[j - 1]) for j in range(1, len(b)))
    return max(costs), costs


def _check_args(n: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")


def _suffix_tables(n: int, parts_count: int) -> list[np.ndarray]:
    """DP tables over prefix sums, from the last cut back to the first.

    tables[j][b] is the least achievable maximum of the cut products
    numbered j+1, ..., parts_count given b_j = b (with the forced endpoint
    b_{parts_count} = n).  Values are bounded by n^2, so int64 is exact;
    n^2 + 1 acts as infinity.
    """
    size = n + 1
    inf = n * n + 1
    b_range = np.arange(size, dtype=np.int64)
    layer = np.full(size, inf, dtype=np.int64)
    layer[n] = 0
    tables = [layer]
    for _ in range(parts_count):
        prev = tables[-1]
        if size <= _MATRIX_LIMIT:
            # combined[b, b'] = max(b' * (n - b), prev[b']); take suffix
            # minima along b' and read the diagonal to enforce b' >= b.
            combined = np.maximum(np.outer(n - b_range, b_range), prev[None, :])
            sufmin = np.minimum.accumulate(combined[:, ::-1], axis=1)[:, ::-1]
            tables.append(sufmin[b_range, b_range].copy())
        else:
            nxt = np.empty(size, dtype=np.int64)
            for b in range(size):
                nxt[b] = np.maximum(b_range[b:] * (n - b), prev[b:]).min()
            tables.append(nxt)
    tables.reverse()
    return tables


def minimax_exact(n: int, k: int) -> MinimaxResult:
    """Minimal worst cut product over compositions of n into k-1 parts.

    O(k n^2) dynamic programming over prefix sums.  Among the optimal
    compositions, the one with the lexicographically smallest prefix
    vector is returned, recovered by a greedy forward pass over the DP
    tables (any locally feasible choice stays globally feasible, so the
    greedy pick is the lexicographic minimum).
    """
    _check_args(n, k)
    parts_count = k - 1
    tables = _suffix_tables(n, parts_count)
    value = int(tables[0][0])
    prefix = [0]
    for j in range(parts_count):
        b = prefix[-1]
        nxt = tables[j + 1]
        for bp in range(b, n + 1):
            if bp * (n - b) <= value and nxt[bp] <= value:
                prefix.append(bp)
                break
        else:  # pragma: no cover - the DP guarantees a feasible choice
            raise AssertionError("inconsistent DP tables")
    witness = Composition(tuple(prefix[i + 1] - prefix[i] for i in range(parts_count)))
    got, costs = composition_cost(witness)
    if got != value:  # pragma: no cover
        raise AssertionError("witness cost disagrees with DP value")
    return MinimaxResult(value=value, witness=witness, per_j_costs=costs)


def minimax_bruteforce(n: int, k: int) -> MinimaxResult:
    """Exhaustive oracle for minimax_exact: same value, same witness.

    Enumerates every composition (as a non-decreasing prefix tuple) in
    lexicographic order and keeps the first strict improvement, so the
    reported witness is again the lexicographically smallest optimum.
    """
    _check_args(n, k)
    cases = math.comb(n + k - 2, k - 2)
    if cases > BRUTE_FORCE_CAP:
        raise ValueError(
            f"brute force would enumerate {cases} compositions "
            f"(cap {BRUTE_FORCE_CAP}); use minimax_exact instead"
        )
    best_value = None
    best_prefix = None
    for inner in itertools.combinations_with_replacement(range(n + 1), k - 2):
        b = (0,) + inner + (n,)
        value = max(b[j] * (n - b[j - 1]) for j in range(1, k))
        if best_value is None or value < best_value:
            best_value = value
            best_prefix = b
    parts = tuple(best_prefix[i + 1] - best_prefix[i] for i in range(k - 1))
    witness = Composition(parts)
    _, costs = composition_cost(witness)
    return MinimaxResult(value=best_value, witness=witness, per_j_costs=costs)


def alpha_sequence(k: int) -> AlphaSequence:
    """Cut-point ratios for k: alpha_0 = 0, alpha_j = thr / (1 - alpha_{j-1}).

    Exact rational arithmetic for k in {2, 3, 5}; otherwise mpmath values
    carrying PRECISION_DPS digits.  The defining identities are validated
    before returning.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    thr = gs_threshold(k)
    if thr.exact is not None:
        phi = thr.exact
        values = [Fraction(0)]
        for _ in range(k - 1):
            values.append(phi / (1 - values[-1]))
        if values[-1] != 1:  # pragma: no cover - identity of the recurrence
            raise AssertionError("exact cut points must end at 1")
        return AlphaSequence(k=k, values=tuple(values), exact=True)
    phi = thr.value
    values = [_MP.mpf(0)]
    for _ in range(k - 1):
        values.append(phi / (1 - values[-1]))
    if abs(values[-1] - 1) > _MP.mpf("1e-12"):  # pragma: no cover
        raise AssertionError("cut points failed to reach 1")
    if any(values[j] <= values[j - 1] for j in range(1, k)):  # pragma: no cover
        raise AssertionError("cut points must increase strictly")
    return AlphaSequence(k=k, values=tuple(values), exact=False)


def _ceil_minus_half(x: Fraction) -> int:
    """ceil(x - 1/2) for exact rational x."""
    return math.ceil(x - Fraction(1, 2))


def witness_composition(n: int, k: int) -> Composition:
    """Near-optimal composition from the cut-point ratios.

    Prefix sums are b_j = ceil(n * alpha_j - 1/2).  On the floating path a
    value within 1e-9 of an integer makes the rounding ambiguous; both
    candidate roundings are then costed exactly and the cheaper (then
    lexicographically smaller) prefix vector wins, which keeps the result
    deterministic.  The cost always satisfies the quadratic upper bound
    thr*n^2 + (1+thr)*n/2 + 1/4 (checked in the tests).
    """
    _check_args(n, k)
    alphas = alpha_sequence(k)
    if alphas.exact:
        prefix = tuple(_ceil_minus_half(Fraction(n) * a) for a in alphas.values)
        parts = tuple(prefix[i + 1] - prefix[i] for i in range(k - 1))
        return Composition(parts)

    options: list[tuple[int, ...]] = []
    for a in alphas.values:
        x = n * a - _MP.mpf(1) / 2
        nearest = int(_MP.nint(x))
        if abs(x - nearest) < _MP.mpf(_HALF_INTEGER_GUARD):
            options.append((nearest, nearest + 1))
        else:
            options.append((int(_MP.ceil(x)),))
    best: tuple[int, tuple[int, ...]] | None = None
    for prefix in itertools.product(*options):
        if prefix[0] != 0 or prefix[-1] != n:
            continue
        if any(prefix[i + 1] < prefix[i] for i in range(len(prefix) - 1)):
            continue
        parts = tuple(prefix[i + 1] - prefix[i] for i in range(k - 1))
        value, _ = composition_cost(parts)
        if best is None or (value, prefix) < best:
            best = (value, prefix)
    if best is None:  # pragma: no cover - plain ceilings are always valid
        raise AssertionError("no valid rounding of the cut points")
    parts = tuple(best[1][i + 1] - best[1][i] for i in range(k - 1))
    return Composition(parts)
