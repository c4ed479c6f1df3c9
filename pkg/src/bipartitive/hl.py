"""HL-bipartitions: bipartitions whose two off-diagonal blocks have rank <= 1.

Besides the direct enumeration this module holds the normalization
pipeline, which turns an irreducible rational matrix into a ``v``-normalized
matrix with the same HL-bipartitions and no zero entries. The
normalization replaces a generic diagonal of indeterminates by a random
integer diagonal that makes the matrix strictly diagonally dominant; only
the "no zero entry in the inverse" property is left to chance and is
checked and resampled.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import NotIrreducibleError
from .families import (
    AxiomReport,
    Bipartition,
    BipartitionFamily,
    check_bipartitive,
    check_weakly_bipartitive,
)
from .field import RATIONALS
from .l2 import clans, induce, l2_from_matrix
from .matrix import ExactMatrix, block_rank_at_most_one

__all__ = [
    "NormalizationResult",
    "NormalizationError",
    "is_hl_bipartition",
    "hl_family",
    "is_v_normalized",
    "normalize",
    "hl_via_clans",
    "verify_forward",
    "inverse_block_rank_check",
    "MAX_ATTEMPTS",
    "SHIFT_RANGE",
]

MAX_ATTEMPTS = 32
SHIFT_RANGE = (1, 2**20)


class NormalizationError(RuntimeError):
    pass


def _hl_test(rows, X: list[int], Y: list[int]) -> bool:
    return block_rank_at_most_one(rows, X, Y) and block_rank_at_most_one(rows, Y, X)


def is_hl_bipartition(A: ExactMatrix, b: Bipartition) -> bool:
    if not A.is_square or A.nrows != b.n:
        raise ValueError(f"matrix shape {A.shape} does not match ground size {b.n}")
    X = [i - 1 for i in sorted(b.first)]
    Y = [i - 1 for i in sorted(b.second)]
    return _hl_test(A.rows, X, Y)


def hl_family(A: ExactMatrix) -> BipartitionFamily:
    """Every HL-bipartition of ``A``, found by testing all ``2**(n-1) - 1``."""
    if not A.is_square:
        raise ValueError("HL-bipartitions are defined for square matrices")
    n = A.nrows
    if n < 2:
        raise ValueError("HL-bipartitions need n >= 2")
    rows = A.rows
    rest = list(range(1, n))
    found = []
    for r in range(0, n - 1):
        for extra in combinations(rest, r):
            X = [0, *extra]
            xs = set(X)
            Y = [j for j in range(n) if j not in xs]
            if len(X) == 1 or len(Y) == 1 or _hl_test(rows, X, Y):
                found.append(Bipartition([i + 1 for i in X], n))
    return BipartitionFamily(n, found)


@dataclass(frozen=True)
class NormalizationResult:
    matrix: ExactMatrix
    vertex: int
    retries_used: int
    shift: tuple[Fraction, ...]


def is_v_normalized(A: ExactMatrix, v: int) -> bool:
    if not A.is_square or not 1 <= v <= A.nrows:
        return False
    k = v - 1
    return all(A[k, j] == 1 and A[j, k] == 1 for j in range(A.nrows) if j != k)


def _shift_rng(seed: int, attempt: int) -> random.Random:
    return random.Random(f"normalize:{seed}:{attempt}")


def normalize(A: ExactMatrix, v: int, seed: int = 0) -> NormalizationResult:
    """A ``v``-normalized matrix with nonzero entries and the same HL family as ``A``.

    Each attempt draws ``r_i`` uniformly from ``SHIFT_RANGE`` and shifts the
    diagonal by ``d_i = r_i * (1 + |a_ii| + sum_j |a_ij|)``; the shifted
    matrix ``B`` is strictly diagonally dominant, so ``B`` and all of its
    principal submatrices are invertible. If ``W = B^-1`` has a zero entry the
    attempt is discarded. The result is ``D W D'`` where ``D`` and ``D'``
    rescale column ``v`` and row ``v`` of ``W`` to ones.

    ``retries_used`` counts discarded attempts. Symmetric input gives
    symmetric output.
    """
    if A.field != RATIONALS:
        raise ValueError("normalize works over the rationals only")
    if not A.is_square:
        raise ValueError("normalize needs a square matrix")
    n = A.nrows
    if not 1 <= v <= n:
        raise ValueError(f"vertex {v} outside [{n}]")
    if not A.is_irreducible():
        raise NotIrreducibleError("normalize requires an irreducible matrix")
    k = v - 1
    rows = A.rows
    weights = [1 + sum(abs(x) for x in row) for row in rows]
    lo, hi = SHIFT_RANGE
    for attempt in range(MAX_ATTEMPTS):
        rng = _shift_rng(seed, attempt)
        shift = tuple(Fraction(rng.randint(lo, hi)) * w for w in weights)
        W = A.add_diagonal(shift).inverse()
        if any(x == 0 for row in W.rows for x in row):
            continue
        left = [1 if i == k else 1 / W[i, k] for i in range(n)]
        right = [1 if j == k else 1 / W[k, j] for j in range(n)]
        hat = W.scale_rows_cols(left, right)
        assert is_v_normalized(hat, v)
        assert all(x != 0 for row in hat.rows for x in row)
        assert not A.is_symmetric() or hat.is_symmetric()
        return NormalizationResult(hat, v, attempt, shift)
    raise NormalizationError(
        f"no shift with a zero-free inverse after {MAX_ATTEMPTS} attempts (seed={seed})"
    )


def hl_via_clans(A: ExactMatrix, v: int) -> BipartitionFamily:
    """HL family of a ``v``-normalized matrix, read off the clans of ``g_A`` minus ``v``."""
    if not is_v_normalized(A, v):
        raise ValueError(f"matrix is not {v}-normalized")
    n = A.nrows
    rest = [i for i in range(1, n + 1) if i != v]
    g = induce(l2_from_matrix(A), rest)
    return BipartitionFamily(n, (Bipartition(I, n) for I in clans(g)))


def verify_forward(A: ExactMatrix) -> AxiomReport:
    """Check the HL family of an irreducible matrix against the closure axioms.

    Always Q1+Q2; Q3 as well when ``A`` is symmetric. A failing report means
    a bug in this package.
    """
    if not A.is_square or A.nrows < 2:
        raise ValueError("verify_forward needs a square matrix with n >= 2")
    if not A.is_irreducible():
        raise NotIrreducibleError("verify_forward requires an irreducible matrix")
    H = hl_family(A)
    if A.is_symmetric():
        return check_bipartitive(H)
    return check_weakly_bipartitive(H)


def inverse_block_rank_check(T: ExactMatrix, k: int) -> bool:
    """Off-diagonal blocks of ``T`` and ``T^-1`` have equal ranks (leading k x k split)."""
    if not T.is_square:
        raise ValueError("T must be square")
    n = T.nrows
    if not 1 <= k < n:
        raise ValueError(f"block size {k} must satisfy 1 <= k < {n}")
    head = list(range(1, k + 1))
    tail = list(range(k + 1, n + 1))
    if T.submatrix(head, head).determinant() == 0:
        raise ValueError("leading block is singular")
    W = T.inverse()
    return (
        W.submatrix(head, tail).rank() == T.submatrix(head, tail).rank()
        and W.submatrix(tail, head).rank() == T.submatrix(tail, head).rank()
    )
