"""Shared test helpers: deterministic random presentations and Fibonacci."""

from __future__ import annotations

import random

from nilquad import Presentation, QuadraticRelation


def random_matrix_presentation(
    rng: random.Random, n: int, d: int, mod: int | None
) -> Presentation:
    """Presentation from a random d x n^2 coefficient matrix.

    Entries are uniform on {0, 1} over F_2 and uniform on [-3, 3] over the
    rationals; all-zero rows are resampled so every relation is non-zero.
    """
    gens = tuple(f"x{i}" for i in range(1, n + 1))
    pairs = [(l, r) for l in gens for r in gens]
    relations = []
    for _ in range(d):
        while True:
            if mod == 2:
                coeffs = [rng.randint(0, 1) for _ in pairs]
            elif mod is not None:
                coeffs = [rng.randrange(mod) for _ in pairs]
            else:
                coeffs = [rng.randint(-3, 3) for _ in pairs]
            terms = tuple((c, l, r) for c, (l, r) in zip(coeffs, pairs) if c)
            if terms:
                break
        relations.append(QuadraticRelation(terms))
    return Presentation(gens, tuple(relations), mod, None)


def random_sparse_presentation(
    rng: random.Random, n: int, d: int, mod: int | None, max_terms: int = 4
) -> Presentation:
    """Presentation whose relations each carry a few random terms."""
    gens = tuple(f"x{i}" for i in range(1, n + 1))
    pairs = [(l, r) for l in gens for r in gens]
    relations = []
    for _ in range(d):
        count = rng.randint(1, min(max_terms, len(pairs)))
        support = rng.sample(pairs, count)
        terms = []
        for l, r in support:
            if mod == 2:
                c = 1
            elif mod is not None:
                c = rng.randint(1, mod - 1)
            else:
                c = rng.choice([-3, -2, -1, 1, 2, 3])
            terms.append((c, l, r))
        relations.append(QuadraticRelation(tuple(terms)))
    return Presentation(gens, tuple(relations), mod, None)


def fibonacci_upto(limit: int) -> list[int]:
    """Fibonacci numbers F_0 = F_1 = 1, F_i = F_{i-1} + F_{i-2}, up to limit."""
    seq = [1, 1]
    while seq[-1] <= limit:
        seq.append(seq[-1] + seq[-2])
    return [f for f in seq if f <= limit]
