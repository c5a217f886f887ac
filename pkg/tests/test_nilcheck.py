"""Graded dimensions: oracles, bound comparisons, field consistency."""

import random

import pytest

from nilquad import (
    Presentation,
    QuadraticRelation,
    construct_presentation,
    fixture_ex8,
    graded_dimension,
    gs_series,
    hilbert_report,
    is_k_step_nilpotent,
    minimax_exact,
)
from nilquad.nilcheck import _rank, _rank_dense_exact, _relation_rows

from .conftest import random_matrix_presentation, random_sparse_presentation


def free_algebra(n):
    return Presentation(tuple(f"x{i}" for i in range(1, n + 1)), ())


class TestGradedDimension:
    def test_free_algebra(self):
        free3 = free_algebra(3)
        assert [graded_dimension(free3, m) for m in range(4)] == [1, 3, 9, 27]

    def test_fixture_degree_2(self):
        assert graded_dimension(fixture_ex8(), 2) == 39

    def test_fixture_degree_3_frozen(self):
        # recorded oracle value from this operation; the bound gives >= 112
        assert graded_dimension(fixture_ex8(), 3) == 112

    def test_fixture_degree_4(self):
        assert graded_dimension(fixture_ex8(), 4) == 0

    def test_single_relation_counts_words(self):
        # words avoiding the factor x1 x2: m + 1 of them at degree m
        pres = Presentation(
            ("x1", "x2"), (QuadraticRelation(((1, "x1", "x2"),)),)
        )
        for m in range(7):
            assert graded_dimension(pres, m) == m + 1

    def test_nilpotent_single_generator(self):
        pres = Presentation(("x",), (QuadraticRelation(((1, "x", "x"),)),))
        assert [graded_dimension(pres, m) for m in range(3)] == [1, 1, 0]

    def test_column_cap(self):
        with pytest.raises(ValueError, match="cap"):
            graded_dimension(free_algebra(10), 8, column_cap=1000)

    def test_invalid_modulus(self):
        with pytest.raises(ValueError, match="prime"):
            graded_dimension(free_algebra(2), 2, mod=6)
        with pytest.raises(ValueError, match="prime"):
            graded_dimension(free_algebra(2), 2, mod=1)


class TestHilbertReport:
    def test_fixture_report(self):
        rep = hilbert_report(fixture_ex8(), max_degree=4, k=4)
        assert rep.dims == (1, 8, 39, 112, 0)
        assert rep.gs_bound.coeffs == (1, 8, 39, 112)
        assert rep.gs_ok
        assert rep.nilpotent

    def test_single_relation_meets_bound_exactly(self):
        pres = Presentation(
            ("x1", "x2"), (QuadraticRelation(((1, "x1", "x2"),)),)
        )
        rep = hilbert_report(pres, max_degree=5)
        assert rep.dims == (1, 2, 3, 4, 5, 6)
        assert rep.dims == gs_series(2, 1, 5).coeffs

    def test_early_stop_pads_zeros(self):
        pres = Presentation(("x",), (QuadraticRelation(((1, "x", "x"),)),))
        rep = hilbert_report(pres, max_degree=5, k=2)
        assert rep.dims == (1, 1, 0, 0, 0, 0)
        assert rep.nilpotent

    def test_text_shape(self):
        rep = hilbert_report(fixture_ex8(), max_degree=4, k=4)
        lines = rep.to_text().splitlines()
        assert lines[0] == "dim R_0 = 1"
        assert lines[-1] == "R_4 = 0: NILPOTENT"
        rep2 = hilbert_report(fixture_ex8(), max_degree=4, k=4, mod=32003)
        assert "mod 32003" in rep2.to_text()

    def test_json_mirror(self):
        rep = hilbert_report(fixture_ex8(), max_degree=4, k=4)
        doc = rep.to_json_dict()
        assert doc["dims"] == [1, 8, 39, 112, 0]
        assert doc["nilpotent"] is True
        assert doc["field"] == "rational"

    def test_methods_agree(self):
        rng = random.Random(1234)
        for _ in range(25):
            n = rng.randint(1, 3)
            d = rng.randint(0, n * n)
            mod = rng.choice([None, 2, 5, 32003])
            pres = random_sparse_presentation(rng, n, d, mod)
            a = hilbert_report(pres, max_degree=4, method="incremental")
            b = hilbert_report(pres, max_degree=4, method="direct")
            assert a.dims == b.dims, (n, d, mod)

    def test_unknown_method(self):
        with pytest.raises(ValueError, match="method"):
            hilbert_report(free_algebra(2), max_degree=2, method="guess")


class TestNilpotency:
    def test_fixture(self):
        assert is_k_step_nilpotent(fixture_ex8(), 4)
        assert not is_k_step_nilpotent(fixture_ex8(), 3)

    def test_free_algebra_never(self):
        for k in range(1, 5):
            assert not is_k_step_nilpotent(free_algebra(2), k)

    def test_construct_then_check(self):
        for n in range(1, 7):
            for k in (2, 3, 4):
                pres = construct_presentation(n, k)
                assert is_k_step_nilpotent(pres, k), (n, k)

    def test_mod_certificate_agrees(self):
        pres = construct_presentation(6, 3)
        assert is_k_step_nilpotent(pres, 3, mod=2)
        assert is_k_step_nilpotent(pres, 3, mod=32003)


class TestConstructedDegreeTwo:
    def test_relations_independent_over_every_field(self):
        # disjoint supports make the relation vectors independent, so the
        # degree-2 component loses exactly one dimension per relation
        for n in range(1, 9):
            for k in range(2, 6):
                pres = construct_presentation(n, k)
                for mod in (None, 2, 32003):
                    dim2 = graded_dimension(pres, 2, mod=mod)
                    assert dim2 == n * n - pres.d, (n, k, mod)


class TestFieldConsistency:
    def test_constructed_presentations(self):
        # all-ones chain relations: dims agree over Q, F_2 and F_32003;
        # a disagreement would be surfaced here, not hidden
        for n in range(1, 6):
            for k in (2, 3, 4):
                pres = construct_presentation(n, k)
                top = min(k, 4)
                rational = hilbert_report(pres, max_degree=top)
                for p in (2, 32003):
                    modular = hilbert_report(pres, max_degree=top, mod=p)
                    assert modular.dims == rational.dims, (n, k, p)


class TestBoundProperties:
    def test_random_presentations_respect_bound(self):
        rng = random.Random(97)
        for trial in range(60):
            n = rng.randint(1, 3)
            d = rng.randint(0, n * n)
            mod = 2 if trial % 2 else None
            pres = random_matrix_presentation(rng, n, d, mod)
            rep = hilbert_report(pres, max_degree=5, mod=mod)
            assert rep.gs_ok, (n, d, mod, rep.dims)

    def test_appending_relation_never_raises_dims(self):
        rng = random.Random(4321)
        for _ in range(20):
            n = rng.randint(1, 3)
            d = rng.randint(0, n * n - 1)
            mod = rng.choice([None, 2])
            pres = random_sparse_presentation(rng, n, d, mod)
            extra = random_sparse_presentation(rng, n, 1, mod)
            bigger = Presentation(
                pres.generators, pres.relations + extra.relations, mod, None
            )
            before = hilbert_report(pres, max_degree=4, mod=mod).dims
            after = hilbert_report(bigger, max_degree=4, mod=mod).dims
            assert all(b <= a for a, b in zip(before, after)), (n, d, mod)


class TestRankEngines:
    def test_engines_agree_on_random_matrices(self):
        rng = random.Random(2024)
        for _ in range(40):
            nrows = rng.randint(1, 12)
            ncols = rng.randint(1, 10)
            rows = []
            for _ in range(nrows):
                row = {
                    j: rng.randint(-4, 4)
                    for j in range(ncols)
                    if rng.random() < 0.6
                }
                rows.append({j: v for j, v in row.items() if v})
            dense_q = _rank_dense_exact(rows, ncols, None)
            assert _rank(rows, ncols, None) == dense_q
            for p in (2, 3, 32003):
                dense_p = _rank_dense_exact(rows, ncols, p)
                assert _rank(rows, ncols, p) == dense_p
            # modular rank never exceeds the rational rank
            assert _rank(rows, ncols, 2) <= dense_q

    def test_rows_in_pinned_order(self):
        # degree-3 words over two generators indexed base-2, first letter
        # most significant; rows ordered by (relation, split, u, v)
        pres = Presentation(
            ("x1", "x2"),
            (
                QuadraticRelation(((1, "x1", "x2"),)),
                QuadraticRelation(((1, "x2", "x2"),)),
            ),
        )
        rows = _relation_rows(pres, 3, None)
        assert rows == [
            {2: 1},  # (x1 x2) x1
            {3: 1},  # (x1 x2) x2
            {1: 1},  # x1 (x1 x2)
            {5: 1},  # x2 (x1 x2)
            {6: 1},  # (x2 x2) x1
            {7: 1},  # (x2 x2) x2
            {3: 1},  # x1 (x2 x2)
            {7: 1},  # x2 (x2 x2)
        ]


def test_fixture_bound_met_at_every_degree():
    # the built-in example meets the bound with equality in every degree
    rep = hilbert_report(fixture_ex8(), max_degree=4, k=4)
    assert rep.dims[:4] == rep.gs_bound.coeffs
