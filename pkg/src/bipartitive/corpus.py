"""Seeded random instances: graphs, tournaments, {-1, 0, 1} and rational matrices.

All generators take a :class:`random.Random`, so a fixed seed gives a fixed
corpus. Matrices that must be irreducible are produced by rejection.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .graphs import Graph, Tournament
from .matrix import ExactMatrix

__all__ = [
    "random_graph",
    "random_tree",
    "random_cograph",
    "random_tournament",
    "random_near_transitive_tournament",
    "random_sign_matrix",
    "random_irreducible_sign_matrix",
    "random_rational_matrix",
    "random_irreducible_rational_matrix",
    "random_invertible_rational_matrix",
]

MAX_REJECTIONS = 10_000


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    return Graph(n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < p])


def _relabel(n: int, edges, rng: random.Random) -> list[tuple[int, int]]:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return [(perm[x - 1], perm[y - 1]) for x, y in edges]


def random_tree(n: int, rng: random.Random) -> Graph:
    edges = [(rng.randint(1, i - 1), i) for i in range(2, n + 1)]
    return Graph(n, _relabel(n, edges, rng))


def random_cograph(n: int, rng: random.Random, connected: bool = True) -> Graph:
    """Built by random series/parallel composition; the top step is a join if ``connected``."""

    def build(vs: list[int], top: bool) -> set[tuple[int, int]]:
        if len(vs) == 1:
            return set()
        cut = rng.randint(1, len(vs) - 1)
        left, right = vs[:cut], vs[cut:]
        edges = build(left, False) | build(right, False)
        if (top and connected) or rng.random() < 0.5:
            edges |= {(x, y) for x in left for y in right}
        return edges

    vs = list(range(1, n + 1))
    rng.shuffle(vs)
    return Graph(n, build(vs, True))


def random_tournament(n: int, rng: random.Random) -> Tournament:
    arcs = [(x, y) if rng.random() < 0.5 else (y, x) for x, y in combinations(range(1, n + 1), 2)]
    return Tournament(n, arcs)


def random_near_transitive_tournament(n: int, rng: random.Random, flip: float = 0.15) -> Tournament:
    """A random linear order with a few arcs reversed; has many bi-joins."""
    order = list(range(1, n + 1))
    rng.shuffle(order)
    arcs = []
    for i, j in combinations(range(n), 2):
        x, y = order[i], order[j]
        arcs.append((y, x) if rng.random() < flip else (x, y))
    return Tournament(n, arcs)


def random_sign_matrix(
    n: int, rng: random.Random, symmetric: bool = False, density: float = 2 / 3
) -> ExactMatrix:
    """Off-diagonal entries in {-1, 0, 1}, nonzero with probability ``density``; zero diagonal."""
    a = [[0] * n for _ in range(n)]

    def draw() -> int:
        return rng.choice((-1, 1)) if rng.random() < density else 0

    for i in range(n):
        for j in range(n):
            if i == j or (symmetric and j < i):
                continue
            a[i][j] = draw()
            if symmetric:
                a[j][i] = a[i][j]
    return ExactMatrix(a)


def random_irreducible_sign_matrix(
    n: int, rng: random.Random, symmetric: bool = False, density: float | None = None
) -> ExactMatrix:
    for _ in range(MAX_REJECTIONS):
        d = rng.choice((0.3, 0.5, 0.8)) if density is None else density
        A = random_sign_matrix(n, rng, symmetric, d)
        if A.is_irreducible():
            return A
    raise RuntimeError("could not draw an irreducible matrix")


def _random_rational(rng: random.Random, zero_prob: float) -> Fraction:
    if rng.random() < zero_prob:
        return Fraction(0)
    num = rng.choice([k for k in range(-5, 6) if k])
    return Fraction(num, rng.randint(1, 4))


def random_rational_matrix(
    n: int, rng: random.Random, symmetric: bool = False, zero_prob: float = 0.3
) -> ExactMatrix:
    a = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if symmetric and j < i:
                a[i][j] = a[j][i]
            else:
                a[i][j] = _random_rational(rng, zero_prob)
    return ExactMatrix(a)


def random_irreducible_rational_matrix(
    n: int, rng: random.Random, symmetric: bool = False, zero_prob: float | None = None
) -> ExactMatrix:
    for _ in range(MAX_REJECTIONS):
        z = rng.choice((0.2, 0.4, 0.6)) if zero_prob is None else zero_prob
        A = random_rational_matrix(n, rng, symmetric, z)
        if A.is_irreducible():
            return A
    raise RuntimeError("could not draw an irreducible matrix")


def random_invertible_rational_matrix(n: int, rng: random.Random, zero_prob: float = 0.3) -> ExactMatrix:
    for _ in range(MAX_REJECTIONS):
        A = random_rational_matrix(n, rng, zero_prob=zero_prob)
        if A.determinant() != 0:
            return A
    raise RuntimeError("could not draw an invertible matrix")
