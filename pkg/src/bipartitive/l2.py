"""Labelled 2-structures: labels on ordered pairs of distinct points, and clans."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from types import MappingProxyType

from .families import SetFamily
from .field import RATIONALS, Field
from .matrix import ExactMatrix

__all__ = [
    "L2Structure",
    "l2_from_matrix",
    "matrix_from_l2",
    "induce",
    "is_clan",
    "clans",
]


class L2Structure:
    """A label for every ordered pair ``(x, y)`` of distinct ground points."""

    __slots__ = ("ground", "_labels", "_order")

    def __init__(self, ground: Iterable[int], labels: Mapping[tuple[int, int], object]):
        g = frozenset(ground)
        if not g:
            raise ValueError("an l2-structure needs a nonempty ground set")
        expected = {(x, y) for x in g for y in g if x != y}
        if set(labels) != expected:
            extra = set(labels) - expected
            missing = expected - set(labels)
            raise ValueError(
                f"label domain mismatch (missing {sorted(missing)[:3]}, extra {sorted(extra)[:3]})"
            )
        self.ground = g
        self._labels = MappingProxyType(dict(labels))
        self._order = tuple(sorted(g))

    @classmethod
    def constant(cls, ground: Iterable[int], label) -> "L2Structure":
        g = sorted(set(ground))
        return cls(g, {(x, y): label for x in g for y in g if x != y})

    @property
    def labels(self) -> Mapping[tuple[int, int], object]:
        return self._labels

    def __call__(self, x: int, y: int):
        return self._labels[(x, y)]

    def is_symmetric(self) -> bool:
        lab = self._labels
        return all(lab[(x, y)] == lab[(y, x)] for (x, y) in lab)

    def __eq__(self, other) -> bool:
        if not isinstance(other, L2Structure):
            return NotImplemented
        return self.ground == other.ground and dict(self._labels) == dict(other._labels)

    def __hash__(self) -> int:
        return hash((self.ground, frozenset(self._labels.items())))

    def __repr__(self) -> str:
        return f"L2Structure(ground={sorted(self.ground)}, {dict(self._labels)})"


def l2_from_matrix(A: ExactMatrix) -> L2Structure:
    """The structure ``g_A`` on ``[n]``: off-diagonal entries become labels."""
    if not A.is_square:
        raise ValueError("l2_from_matrix needs a square matrix")
    n = A.nrows
    labels = {(i + 1, j + 1): A[i, j] for i in range(n) for j in range(n) if i != j}
    return L2Structure(range(1, n + 1), labels)


def matrix_from_l2(g: L2Structure, field: Field = RATIONALS) -> ExactMatrix:
    """``M(g)``: zero diagonal, label ``g(i, j)`` at ``(i, j)``."""
    n = len(g.ground)
    if g.ground != frozenset(range(1, n + 1)):
        raise ValueError("matrix_from_l2 needs ground {1..n}; relabel first")
    return ExactMatrix(
        [[0 if i == j else g(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)], field
    )


def induce(g: L2Structure, X: Iterable[int]) -> L2Structure:
    X = frozenset(X)
    if not X <= g.ground:
        raise ValueError("induce: subset is not contained in the ground set")
    lab = g.labels
    return L2Structure(X, {(x, y): lab[(x, y)] for x in X for y in X if x != y})


def _clan_test(lab, members: list[int], outside: list[int]) -> bool:
    a = members[0]
    for x in outside:
        out_label = lab[(a, x)]
        in_label = lab[(x, a)]
        for b in members[1:]:
            if lab[(b, x)] != out_label or lab[(x, b)] != in_label:
                return False
    return True


def is_clan(g: L2Structure, X: Iterable[int]) -> bool:
    X = frozenset(X)
    if not X:
        raise ValueError("clans are nonempty")
    if not X <= g.ground:
        raise ValueError("is_clan: subset is not contained in the ground set")
    return _clan_test(g.labels, sorted(X), sorted(g.ground - X))


def clans(g: L2Structure) -> SetFamily:
    """All nonempty clans, by scanning every subset of the ground set."""
    order = g._order
    k = len(order)
    lab = g.labels
    found = []
    for mask in range(1, 1 << k):
        members = [order[i] for i in range(k) if mask >> i & 1]
        outside = [order[i] for i in range(k) if not mask >> i & 1]
        if len(members) == 1 or not outside or _clan_test(lab, members, outside):
            found.append(members)
    return SetFamily(g.ground, found)
