"""Graphs, tournaments, their adjacency/Seidel matrices, splits and bi-joins.

Split and bi-join membership is decided straight from the neighbourhood
definitions (traces ``N(x) & Y`` over ``x`` in the canonical first side),
never through matrix ranks, so the results can serve as an independent
check on :func:`bipartitive.hl.hl_family`.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .families import Bipartition, BipartitionFamily
from .matrix import ExactMatrix

__all__ = [
    "Graph",
    "Tournament",
    "adjacency_matrix",
    "seidel_matrix_graph",
    "seidel_matrix_tournament",
    "splits",
    "bijoins_graph",
    "bijoins_tournament",
    "split_witness",
    "is_module",
]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[frozenset[int]]

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        es = set()
        for e in edges:
            e = tuple(e)
            if len(e) != 2:
                raise ValueError(f"edge {e} is not a pair")
            x, y = e
            if x == y:
                raise ValueError(f"loop at {x}")
            if not (1 <= x <= n and 1 <= y <= n):
                raise ValueError(f"edge {e} outside [{n}]")
            es.add(frozenset((x, y)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(es))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, combinations(range(1, n + 1), 2))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, ((i, i + 1) for i in range(1, n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])

    @cached_property
    def _adjacency(self) -> dict[int, frozenset[int]]:
        adj = {v: set() for v in range(1, self.n + 1)}
        for e in self.edges:
            x, y = e
            adj[x].add(y)
            adj[y].add(x)
        return {v: frozenset(s) for v, s in adj.items()}

    def neighbours(self, x: int) -> frozenset[int]:
        return self._adjacency[x]

    def has_edge(self, x: int, y: int) -> bool:
        return frozenset((x, y)) in self.edges

    def is_connected(self) -> bool:
        seen = {1}
        stack = [1]
        while stack:
            u = stack.pop()
            for w in self.neighbours(u):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def sorted_edges(self) -> list[list[int]]:
        return sorted(sorted(e) for e in self.edges)


@dataclass(frozen=True)
class Tournament:
    n: int
    arcs: frozenset[tuple[int, int]]

    def __init__(self, n: int, arcs: Iterable[Iterable[int]]):
        if n < 1:
            raise ValueError("a tournament needs at least one vertex")
        arcs = {tuple(a) for a in arcs}
        for a in arcs:
            if len(a) != 2 or a[0] == a[1] or not all(1 <= v <= n for v in a):
                raise ValueError(f"invalid arc {a} on [{n}]")
        for x, y in combinations(range(1, n + 1), 2):
            if ((x, y) in arcs) == ((y, x) in arcs):
                raise ValueError(f"pair {{{x},{y}}} needs exactly one arc")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", frozenset(arcs))

    @classmethod
    def transitive(cls, n: int) -> "Tournament":
        return cls(n, combinations(range(1, n + 1), 2))

    @cached_property
    def _out(self) -> dict[int, frozenset[int]]:
        return {
            v: frozenset(y for (x, y) in self.arcs if x == v) for v in range(1, self.n + 1)
        }

    def out_neighbours(self, x: int) -> frozenset[int]:
        return self._out[x]

    def in_neighbours(self, x: int) -> frozenset[int]:
        return frozenset(a for (a, y) in self.arcs if y == x)

    def sorted_arcs(self) -> list[list[int]]:
        return sorted(list(a) for a in self.arcs)


def adjacency_matrix(G: Graph) -> ExactMatrix:
    n = G.n
    return ExactMatrix(
        [[int(G.has_edge(i, j)) for j in range(1, n + 1)] for i in range(1, n + 1)]
    )


def seidel_matrix_graph(G: Graph) -> ExactMatrix:
    n = G.n
    return ExactMatrix(
        [
            [0 if i == j else (-1 if G.has_edge(i, j) else 1) for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ]
    )


def seidel_matrix_tournament(T: Tournament) -> ExactMatrix:
    n = T.n
    return ExactMatrix(
        [
            [0 if i == j else (-1 if (i, j) in T.arcs else 1) for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ]
    )


def _all_bipartitions(n: int):
    if n < 2:
        raise ValueError("bipartitions need n >= 2")
    return BipartitionFamily.all(n)


def _traces(neigh, X: Iterable[int], Y: frozenset[int]) -> set[frozenset[int]]:
    return {neigh(x) & Y for x in X}


def _is_split_traces(traces: set[frozenset]) -> bool:
    return len(traces - {frozenset()}) <= 1


def _is_bijoin_traces(traces: set[frozenset], Y: frozenset) -> bool:
    if len(traces) == 1:
        return True
    if len(traces) == 2:
        t1, t2 = traces
        return t1 | t2 == Y and not t1 & t2
    return False


def splits(G: Graph) -> BipartitionFamily:
    out = []
    for b in _all_bipartitions(G.n):
        if _is_split_traces(_traces(G.neighbours, b.first, b.second)):
            out.append(b)
    return BipartitionFamily(G.n, out)


def bijoins_graph(G: Graph) -> BipartitionFamily:
    out = []
    for b in _all_bipartitions(G.n):
        if _is_bijoin_traces(_traces(G.neighbours, b.first, b.second), b.second):
            out.append(b)
    return BipartitionFamily(G.n, out)


def bijoins_tournament(T: Tournament) -> BipartitionFamily:
    """Bi-joins of a tournament.

    Each ``x`` in the first side must have out-trace ``Y1`` and in-trace
    ``Y - Y1``, or the reverse. Both traces are checked, even though in a
    tournament the in-trace is always the complement of the out-trace.
    """
    out = []
    for b in _all_bipartitions(T.n):
        Y = b.second
        pairs = {(T.out_neighbours(x) & Y, T.in_neighbours(x) & Y) for x in b.first}
        Y1 = next(iter(pairs))[0]
        allowed = {(Y1, Y - Y1), (Y - Y1, Y1)}
        if pairs <= allowed:
            out.append(b)
    return BipartitionFamily(T.n, out)


def split_witness(G: Graph, b: Bipartition) -> tuple[frozenset[int], frozenset[int]] | None:
    """``(X1, Y1)`` with ``X1`` the first-side vertices having a nonempty trace."""
    if b.n != G.n:
        raise ValueError("bipartition and graph have different ground sets")
    Y = b.second
    X1 = set()
    Y1 = frozenset()
    for x in sorted(b.first):
        t = G.neighbours(x) & Y
        if not t:
            continue
        if X1 and t != Y1:
            return None
        X1.add(x)
        Y1 = t
    return frozenset(X1), Y1


def is_module(G: Graph, M: Iterable[int]) -> bool:
    """Every outside vertex sees all of ``M`` or none of it."""
    M = frozenset(M)
    for x in range(1, G.n + 1):
        if x in M:
            continue
        t = G.neighbours(x) & M
        if t and t != M:
            return False
    return True
