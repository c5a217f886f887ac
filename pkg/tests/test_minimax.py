"""Composition minimax: DP vs brute force, cut-point ratios, witnesses."""

import itertools
from fractions import Fraction

import mpmath
import pytest

from nilquad import (
    Composition,
    alpha_sequence,
    composition_cost,
    gs_permits_nilpotency,
    gs_threshold,
    minimax_bruteforce,
    minimax_exact,
    witness_composition,
)


def all_compositions(n, parts):
    """Every composition of n into `parts` non-negative parts."""
    for inner in itertools.combinations_with_replacement(range(n + 1), parts - 1):
        b = (0,) + inner + (n,)
        yield tuple(b[i + 1] - b[i] for i in range(parts))


class TestCompositionCost:
    def test_example_323(self):
        assert composition_cost((3, 2, 3)) == (25, (24, 25, 24))

    def test_single_part(self):
        for n in (1, 2, 7):
            assert composition_cost((n,)) == (n * n, (n * n,))

    def test_example_2112(self):
        assert composition_cost((2, 1, 1, 2)) == (12, (12, 12, 12, 12))

    def test_reversal_symmetry(self):
        for parts in range(2, 6):
            for n in range(1, 13):
                for comp in all_compositions(n, parts):
                    value, costs = composition_cost(comp)
                    rvalue, rcosts = composition_cost(tuple(reversed(comp)))
                    assert value == rvalue
                    assert rcosts == tuple(reversed(costs))

    def test_prefix_sums(self):
        c = Composition((3, 0, 2))
        assert c.n == 5
        assert c.prefix == (0, 3, 3, 5)

    def test_rejects_bad_parts(self):
        with pytest.raises(ValueError):
            Composition(())
        with pytest.raises(ValueError):
            Composition((1, -1))


class TestMinimaxExact:
    def test_example_8_4(self):
        res = minimax_exact(8, 4)
        assert res.value == 25
        assert res.witness.parts == (3, 2, 3)
        assert res.per_j_costs == (24, 25, 24)

    def test_k2_square(self):
        for n in range(1, 20):
            assert minimax_exact(n, 2).value == n * n

    def test_example_7_4(self):
        assert minimax_exact(7, 4).value == 21

    def test_row_path_matches_matrix_path(self, monkeypatch):
        # force the memory-bounded transition used for large n
        import nilquad.minimax as mm

        expected = {(n, k): minimax_exact(n, k) for n in (1, 5, 9) for k in (2, 4, 6)}
        monkeypatch.setattr(mm, "_MATRIX_LIMIT", 0)
        for (n, k), res in expected.items():
            again = minimax_exact(n, k)
            assert (again.value, again.witness) == (res.value, res.witness)

    def test_witness_is_lexicographically_smallest_optimum(self):
        for n in range(1, 11):
            for k in range(2, 6):
                res = minimax_exact(n, k)
                best = None
                for comp in all_compositions(n, k - 1):
                    value, _ = composition_cost(comp)
                    prefix = Composition(comp).prefix[1:]
                    if value == res.value and (best is None or prefix < best):
                        best = prefix
                assert res.witness.prefix[1:] == best, (n, k)


class TestBruteForce:
    def test_example_6_5(self):
        assert minimax_bruteforce(6, 5).value == 12

    def test_example_5_5(self):
        res = minimax_bruteforce(5, 5)
        assert res.value == 10
        # lexicographically smallest optimal witness; (1, 1, 1, 2) attains
        # the same value but has the larger prefix vector
        assert res.witness.parts == (0, 2, 1, 2)
        assert composition_cost((1, 1, 1, 2))[0] == 10

    def test_single_generator(self):
        for k in range(2, 8):
            assert minimax_bruteforce(1, k).value == 1

    def test_guard(self):
        with pytest.raises(ValueError, match="cap"):
            minimax_bruteforce(500, 8)

    def test_oracle_equivalence(self):
        # value and witness agree everywhere the oracle runs
        for n in range(1, 15):
            for k in range(2, 7):
                fast = minimax_exact(n, k)
                slow = minimax_bruteforce(n, k)
                assert fast.value == slow.value, (n, k)
                assert fast.witness == slow.witness, (n, k)


class TestAlphaSequence:
    def test_k5_exact(self):
        seq = alpha_sequence(5)
        assert seq.exact
        assert seq.values == (
            Fraction(0),
            Fraction(1, 3),
            Fraction(1, 2),
            Fraction(2, 3),
            Fraction(1),
        )

    def test_k2_exact(self):
        assert alpha_sequence(2).values == (Fraction(0), Fraction(1))

    def test_k4_algebraic_values(self):
        seq = alpha_sequence(4)
        assert not seq.exact
        with mpmath.workdps(40):
            golden = (mpmath.sqrt(5) - 1) / 2
            assert abs(seq.values[1] - (1 - golden)) < mpmath.mpf("1e-30")
            assert abs(seq.values[2] - golden) < mpmath.mpf("1e-30")
            assert abs(seq.values[3] - 1) < mpmath.mpf("1e-30")

    def test_defining_identity(self):
        for k in range(2, 12):
            seq = alpha_sequence(k)
            thr = gs_threshold(k)
            phi = thr.exact if seq.exact else thr.value
            for j in range(1, k):
                lhs = seq.values[j] * (1 - seq.values[j - 1])
                assert abs(lhs - phi) < 1e-12

    def test_gap_maximum_at_both_ends(self):
        for k in range(2, 12):
            seq = alpha_sequence(k)
            thr = gs_threshold(k)
            phi = thr.exact if seq.exact else thr.value
            gaps = [seq.values[j] - seq.values[j - 1] for j in range(1, k)]
            assert abs(gaps[0] - phi) < 1e-10
            assert abs(gaps[-1] - phi) < 1e-10
            for gap in gaps[1:-1]:
                assert gap < phi - 1e-10


class TestWitnessComposition:
    def test_example_8_4(self):
        w = witness_composition(8, 4)
        assert w.parts == (3, 2, 3)
        assert composition_cost(w)[0] == 25

    def test_example_6_5(self):
        w = witness_composition(6, 5)
        assert w.parts == (2, 1, 1, 2)
        assert composition_cost(w)[0] == 12

    def test_k2(self):
        for n in (1, 4, 9):
            assert witness_composition(n, 2).parts == (n,)

    def test_upper_bound_holds(self):
        # cost <= thr n^2 + (1 + thr) n / 2 + 1/4 for every witness
        for k in range(2, 9):
            thr = gs_threshold(k)
            for n in range(1, 201):
                cost, _ = composition_cost(witness_composition(n, k))
                if thr.exact is not None:
                    phi = thr.exact
                    bound = phi * n * n + (1 + phi) * Fraction(n, 2) + Fraction(1, 4)
                    assert cost <= bound, (n, k)
                else:
                    with mpmath.workdps(40):
                        bound = thr.value * n * n + (1 + thr.value) * n / 2 + 0.25
                        assert cost <= bound + mpmath.mpf("1e-20"), (n, k)

    def test_ratio_approaches_one(self):
        # monitored: witness cost over thr n^2 shrinks towards 1
        for k in range(2, 9):
            thr = gs_threshold(k)
            with mpmath.workdps(40):
                phi = thr.value
                ratio_small = composition_cost(witness_composition(10, k))[0] / (phi * 100)
                ratio_large = composition_cost(witness_composition(200, k))[0] / (phi * 40000)
                assert ratio_large <= ratio_small
                assert ratio_large < mpmath.mpf("1.02")


class TestSandwich:
    def test_bounds_for_small_nk(self):
        # thr n^2 <= minimax <= thr n^2 + (1 + thr) n / 2 + 1/4, the lower
        # comparison done through the exact integer recurrence
        for k in range(2, 9):
            thr = gs_threshold(k)
            for n in range(1, 61):
                value = minimax_exact(n, k).value
                assert gs_permits_nilpotency(n, value, k), (n, k)
                if thr.exact is not None:
                    phi = thr.exact
                    bound = phi * n * n + (1 + phi) * Fraction(n, 2) + Fraction(1, 4)
                    assert value <= bound, (n, k)
                else:
                    with mpmath.workdps(40):
                        bound = thr.value * n * n + (1 + thr.value) * n / 2 + 0.25
                        assert value <= bound + mpmath.mpf("1e-20"), (n, k)
