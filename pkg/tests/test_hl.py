import random
from fractions import Fraction

import pytest

from bipartitive.corpus import (
    random_invertible_rational_matrix,
    random_irreducible_rational_matrix,
    random_irreducible_sign_matrix,
    random_rational_matrix,
)
from bipartitive.errors import NotIrreducibleError
from bipartitive.families import (
    BipartitionFamily,
    check_bipartitive,
    check_weakly_bipartitive,
    make_bipartition,
)
from bipartitive.field import PrimeField
from bipartitive.graphs import Graph, adjacency_matrix, seidel_matrix_graph
from bipartitive.hl import (
    hl_family,
    hl_via_clans,
    inverse_block_rank_check,
    is_hl_bipartition,
    is_v_normalized,
    normalize,
    verify_forward,
)
from bipartitive.matrix import ExactMatrix, SingularMatrixError
from bipartitive.realization import realize

from oracles import hl_family_by_minors

P3 = adjacency_matrix(Graph.path(3))
P4 = adjacency_matrix(Graph.path(4))
C4 = adjacency_matrix(Graph.cycle(4))
F0 = BipartitionFamily.from_sides(4, [{1}, {2}, {3}, {4}, {1, 2}, {1, 3}])


def test_singleton_sides_always_hl():
    rng = random.Random(0)
    for _ in range(30):
        n = rng.randint(2, 6)
        A = random_rational_matrix(n, rng)
        for v in range(1, n + 1):
            assert is_hl_bipartition(A, make_bipartition({v}, n))


def test_is_hl_examples():
    assert is_hl_bipartition(P4, make_bipartition({1, 2}, 4))
    assert not is_hl_bipartition(P4, make_bipartition({1, 4}, 4))
    with pytest.raises(ValueError):
        is_hl_bipartition(P4, make_bipartition({1}, 3))


def test_hl_family_examples():
    for n in range(2, 7):
        K = adjacency_matrix(Graph.complete(n))
        assert hl_family(K) == BipartitionFamily.all(n)
    expected_p4 = BipartitionFamily(4, [*BipartitionFamily.singletons(4), make_bipartition({1, 2}, 4)])
    assert hl_family(P4) == expected_p4 == hl_family_by_minors(P4)
    expected_c4 = BipartitionFamily(4, [*BipartitionFamily.singletons(4), make_bipartition({1, 3}, 4)])
    assert hl_family(C4) == expected_c4 == hl_family_by_minors(C4)
    with pytest.raises(ValueError):
        hl_family(ExactMatrix([[1]]))


def test_hl_family_matches_minor_oracle():
    rng = random.Random(1)
    for _ in range(150):
        n = rng.randint(2, 6)
        A = random_rational_matrix(n, rng, zero_prob=rng.choice((0.3, 0.6, 0.8)))
        assert hl_family(A) == hl_family_by_minors(A)


def test_hl_family_over_prime_field():
    GF3 = PrimeField(3)
    # 2 == -1 mod 3, so this block has rank one over GF(3) but not over Q.
    A = ExactMatrix([[0, 0, 1, 1], [0, 0, 1, 2], [1, 1, 0, 0], [1, 2, 0, 0]])
    b = make_bipartition({1, 2}, 4)
    assert not is_hl_bipartition(A, b)
    A3 = ExactMatrix([[0, 0, 1, 1], [0, 0, 1, -1], [1, 1, 0, 0], [1, -1, 0, 0]], GF3)
    assert not is_hl_bipartition(A3, b)
    B3 = ExactMatrix([[0, 0, 1, 2], [0, 0, 2, 1], [1, 2, 0, 0], [2, 1, 0, 0]], GF3)
    assert is_hl_bipartition(B3, b)
    assert hl_family(B3) == hl_family_by_minors(B3)


def test_diagonal_invariances():
    rng = random.Random(2)
    for _ in range(60):
        n = rng.randint(2, 6)
        A = random_rational_matrix(n, rng, zero_prob=0.5)
        H = hl_family(A)
        shift = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)]
        assert hl_family(A.add_diagonal(shift)) == H
        d1 = [Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 5)) for _ in range(n)]
        d2 = [Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 5)) for _ in range(n)]
        assert hl_family(A.scale_rows_cols(d1, d2)) == H


def _check_normalized(result, A, v):
    hat = result.matrix
    assert is_v_normalized(hat, v)
    assert all(x != 0 for row in hat.rows for x in row)
    assert hl_family(hat) == hl_family(A)
    if A.is_symmetric():
        assert hat.is_symmetric()


def test_normalize_p3():
    r = normalize(P3, 1, seed=0)
    _check_normalized(r, P3, 1)
    assert hl_family(r.matrix) == BipartitionFamily.all(3)
    assert r.vertex == 1 and len(r.shift) == 3


def test_normalize_p4():
    r = normalize(P4, 2, seed=5)
    _check_normalized(r, P4, 2)
    assert r.matrix.is_symmetric()
    assert hl_family(r.matrix) == BipartitionFamily(
        4, [*BipartitionFamily.singletons(4), make_bipartition({1, 2}, 4)]
    )


def test_normalize_rejects():
    with pytest.raises(NotIrreducibleError):
        normalize(ExactMatrix([[0, 1], [0, 0]]), 1)
    with pytest.raises(ValueError):
        normalize(ExactMatrix([[0, 1], [1, 0]], PrimeField(5)), 1)
    with pytest.raises(ValueError):
        normalize(P4, 5)


def test_normalize_deterministic():
    a = normalize(P4, 3, seed=9)
    b = normalize(P4, 3, seed=9)
    assert a == b
    assert normalize(P4, 3, seed=10).shift != a.shift


def test_normalize_shift_is_dominant():
    rng = random.Random(3)
    A = random_irreducible_rational_matrix(5, rng)
    r = normalize(A, 1, seed=1)
    B = A.add_diagonal(r.shift)
    for i in range(5):
        off = sum(abs(B[i, j]) for j in range(5) if j != i)
        assert abs(B[i, i]) > off


def test_hl_via_clans_examples():
    r = normalize(P4, 2, seed=0)
    assert hl_via_clans(r.matrix, 2) == hl_family(r.matrix) == hl_family(P4)
    A = realize(F0)
    assert hl_via_clans(A, 4) == F0
    J = ExactMatrix([[int(i != j) for j in range(5)] for i in range(5)])
    for v in range(1, 6):
        assert hl_via_clans(J, v) == BipartitionFamily.all(5)
    with pytest.raises(ValueError):
        hl_via_clans(P4, 1)


def test_hl_via_clans_random_normalized():
    rng = random.Random(4)
    for seed in range(40):
        n = rng.randint(3, 6)
        A = random_irreducible_rational_matrix(n, rng, symmetric=rng.random() < 0.5)
        v = rng.randint(1, n)
        hat = normalize(A, v, seed).matrix
        assert hl_via_clans(hat, v) == hl_family(hat)


def test_verify_forward_examples():
    S5 = seidel_matrix_graph(Graph.cycle(5))
    assert S5.is_symmetric() and S5.is_irreducible()
    assert verify_forward(S5).passed
    assert verify_forward(adjacency_matrix(Graph.complete(4))).passed
    A = realize(F0)
    assert not A.is_symmetric()
    assert verify_forward(A).passed
    assert check_bipartitive(hl_family(A)).axioms_failed() == {"Q3"}
    with pytest.raises(NotIrreducibleError):
        verify_forward(ExactMatrix([[0, 1], [0, 0]]))


def test_loewy_random():
    rng = random.Random(5)
    for _ in range(80):
        n = rng.randint(2, 6)
        A = random_irreducible_sign_matrix(n, rng)
        assert check_weakly_bipartitive(hl_family(A)).passed
        S = random_irreducible_sign_matrix(n, rng, symmetric=True)
        assert check_bipartitive(hl_family(S)).passed


def test_inverse_block_rank_examples():
    for k in (1, 2, 3):
        assert inverse_block_rank_check(ExactMatrix.identity(4), k)
    assert inverse_block_rank_check(ExactMatrix([[1, 1], [0, 1]]), 1)
    with pytest.raises(ValueError):
        inverse_block_rank_check(ExactMatrix([[0, 1], [1, 0]]), 1)
    with pytest.raises(SingularMatrixError):
        inverse_block_rank_check(ExactMatrix([[1, 1], [1, 1]]), 1)
    with pytest.raises(ValueError):
        inverse_block_rank_check(ExactMatrix.identity(3), 3)


def test_inverse_block_rank_random_5x5():
    rng = random.Random(6)
    checked = 0
    while checked < 100:
        T = random_invertible_rational_matrix(5, rng)
        if T.submatrix({1, 2}, {1, 2}).determinant() == 0:
            continue
        assert inverse_block_rank_check(T, 2)
        checked += 1
