"""Bipartitions of ``[n]``, set families, and their closure axioms.

A :class:`Bipartition` is stored canonically: ``first`` is the side holding
element 1. Axiom checkers never stop at the first failure; they return every
violation so callers can show (or search over) all of them.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from itertools import combinations

from .errors import AxiomError

__all__ = [
    "Bipartition",
    "BipartitionFamily",
    "SetFamily",
    "Violation",
    "AxiomReport",
    "AxiomError",
    "make_bipartition",
    "overlaps",
    "sets_overlap",
    "check_weakly_bipartitive",
    "check_bipartitive",
    "check_partitive",
    "rao_reduce",
    "rao_lift",
]


def _fmt(s: Iterable[int]) -> str:
    return "{" + ",".join(str(x) for x in sorted(s)) + "}"


class Bipartition:
    """An unordered pair ``{X, [n] - X}`` with both sides nonempty."""

    __slots__ = ("n", "first", "second", "_key")

    def __init__(self, side: Iterable[int], n: int):
        if n < 2:
            raise ValueError(f"bipartitions need a ground set of size >= 2, got n={n}")
        side = frozenset(side)
        ground = frozenset(range(1, n + 1))
        if not side <= ground:
            raise ValueError(f"side {_fmt(side)} is not a subset of [{n}]")
        if not side or side == ground:
            raise ValueError(f"side {_fmt(side)} must be a nonempty proper subset of [{n}]")
        other = ground - side
        if 1 not in side:
            side, other = other, side
        self.n = n
        self.first = side
        self.second = other
        self._key = tuple(sorted(side))

    def side_without(self, v: int) -> frozenset[int]:
        return self.second if v in self.first else self.first

    def sides(self) -> tuple[frozenset[int], frozenset[int]]:
        return (self.first, self.second)

    def has_singleton_side(self) -> bool:
        return len(self.first) == 1 or len(self.second) == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Bipartition):
            return NotImplemented
        return self.n == other.n and self._key == other._key

    def __lt__(self, other: "Bipartition") -> bool:
        return (self.n, self._key) < (other.n, other._key)

    def __hash__(self) -> int:
        return hash((self.n, self._key))

    def __repr__(self) -> str:
        return f"{_fmt(self.first)}|{_fmt(self.second)}"

    def to_lists(self) -> list[list[int]]:
        return [sorted(self.first), sorted(self.second)]


def make_bipartition(X: Iterable[int], n: int) -> Bipartition:
    return Bipartition(X, n)


def overlaps(b1: Bipartition, b2: Bipartition) -> bool:
    if b1.n != b2.n:
        raise ValueError(f"ground mismatch: n={b1.n} vs n={b2.n}")
    X, Y = b1.sides()
    X2, Y2 = b2.sides()
    return bool(X & X2 and X & Y2 and Y & X2 and Y & Y2)


def sets_overlap(A: frozenset, B: frozenset) -> bool:
    return bool(A & B and A - B and B - A)


class BipartitionFamily:
    """A deduplicated family of bipartitions of ``[n]``; iterates in sorted order."""

    __slots__ = ("n", "members", "_sorted")

    def __init__(self, n: int, members: Iterable[Bipartition] = ()):
        if n < 2:
            raise ValueError(f"bipartition families need n >= 2, got n={n}")
        ms = frozenset(members)
        for b in ms:
            if b.n != n:
                raise ValueError(f"member {b!r} has ground size {b.n}, expected {n}")
        self.n = n
        self.members = ms
        self._sorted = tuple(sorted(ms))

    @classmethod
    def from_sides(cls, n: int, sides: Iterable[Iterable[int]]) -> "BipartitionFamily":
        return cls(n, (Bipartition(s, n) for s in sides))

    @classmethod
    def all(cls, n: int) -> "BipartitionFamily":
        """All ``2**(n-1) - 1`` bipartitions of ``[n]``."""
        rest = range(2, n + 1)
        members = []
        for r in range(0, n - 1):
            for extra in combinations(rest, r):
                members.append(Bipartition((1, *extra), n))
        return cls(n, members)

    @classmethod
    def singletons(cls, n: int) -> "BipartitionFamily":
        return cls(n, (Bipartition({v}, n) for v in range(1, n + 1)))

    def __iter__(self) -> Iterator[Bipartition]:
        return iter(self._sorted)

    def __len__(self) -> int:
        return len(self._sorted)

    def __contains__(self, b) -> bool:
        return b in self.members

    def __eq__(self, other) -> bool:
        if not isinstance(other, BipartitionFamily):
            return NotImplemented
        return self.n == other.n and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.n, self.members))

    def __repr__(self) -> str:
        return f"BipartitionFamily(n={self.n}, [{', '.join(map(repr, self._sorted))}])"

    def contains_side(self, side: Iterable[int]) -> bool:
        side = frozenset(side)
        if not side or len(side) >= self.n:
            return False
        return Bipartition(side, self.n) in self.members


def _set_key(s: frozenset) -> tuple:
    return (len(s), tuple(sorted(s)))


class SetFamily:
    """A family of nonempty subsets of ``ground``; iterates by (size, elements)."""

    __slots__ = ("ground", "members", "_sorted")

    def __init__(self, ground: Iterable[int], members: Iterable[Iterable[int]] = ()):
        g = frozenset(ground)
        if not g:
            raise ValueError("set families need a nonempty ground set")
        ms = frozenset(frozenset(m) for m in members)
        for m in ms:
            if not m:
                raise ValueError("set family members must be nonempty")
            if not m <= g:
                raise ValueError(f"member {_fmt(m)} is not a subset of ground {_fmt(g)}")
        self.ground = g
        self.members = ms
        self._sorted = tuple(sorted(ms, key=_set_key))

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self._sorted)

    def __len__(self) -> int:
        return len(self._sorted)

    def __contains__(self, s) -> bool:
        return frozenset(s) in self.members

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.ground == other.ground and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.ground, self.members))

    def __repr__(self) -> str:
        return f"SetFamily(ground={_fmt(self.ground)}, [{', '.join(_fmt(m) for m in self._sorted)}])"


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance.

    ``witnesses`` holds the objects that triggered the rule (an element for
    Q1/P1, a pair of members for the closure rules); ``missing`` is the
    object that should have been present.
    """

    axiom: str
    witnesses: tuple
    missing: object

    def describe(self) -> str:
        ws = ", ".join(_render(w) for w in self.witnesses)
        return f"{self.axiom}: witnesses ({ws}) require {_render(self.missing)}"


def _render(obj) -> str:
    if isinstance(obj, (frozenset, set)):
        return _fmt(obj)
    return repr(obj)


@dataclass(frozen=True)
class AxiomReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not self.violations

    def axioms_failed(self) -> set[str]:
        return {v.axiom for v in self.violations}

    def __add__(self, other: "AxiomReport") -> "AxiomReport":
        return AxiomReport(self.violations + other.violations)


def _check_q1(F: BipartitionFamily) -> list[Violation]:
    out = []
    for v in range(1, F.n + 1):
        b = Bipartition({v}, F.n)
        if b not in F.members:
            out.append(Violation("Q1", (v,), b))
    return out


def _overlapping_pairs(F: BipartitionFamily):
    for b1, b2 in combinations(F, 2):
        if overlaps(b1, b2):
            yield b1, b2


def _check_closure(F: BipartitionFamily, strict: bool) -> list[Violation]:
    n = F.n
    out = []
    for b1, b2 in _overlapping_pairs(F):
        X, Y = b1.sides()
        X2, Y2 = b2.sides()
        for side in (X & X2, X & Y2, Y & X2, Y & Y2):
            b = Bipartition(side, n)
            if b not in F.members:
                out.append(Violation("Q2", (b1, b2), b))
        if strict:
            b = Bipartition(X ^ X2, n)
            if b not in F.members:
                out.append(Violation("Q3", (b1, b2), b))
    return out


def check_weakly_bipartitive(F: BipartitionFamily) -> AxiomReport:
    """Q1 and Q2."""
    return AxiomReport(tuple(_check_q1(F) + _check_closure(F, strict=False)))


def check_bipartitive(F: BipartitionFamily) -> AxiomReport:
    """Q1, Q2 and Q3; violations are ordered Q1 first, then per overlapping pair."""
    return AxiomReport(tuple(_check_q1(F) + _check_closure(F, strict=True)))


def check_partitive(P: SetFamily, weak_only: bool = False) -> AxiomReport:
    """P1 and P2, plus P3 unless ``weak_only``."""
    out = []
    ground = P.ground
    if ground not in P.members:
        out.append(Violation("P1", (), ground))
    for v in sorted(ground):
        s = frozenset({v})
        if s not in P.members:
            out.append(Violation("P1", (v,), s))
    for A, B in combinations(P, 2):
        if not sets_overlap(A, B):
            continue
        for derived in (A & B, A - B, B - A, A | B):
            if derived not in P.members:
                out.append(Violation("P2", (A, B), derived))
        if not weak_only:
            sym = A ^ B
            if sym not in P.members:
                out.append(Violation("P3", (A, B), sym))
    return AxiomReport(tuple(out))


def rao_reduce(F: BipartitionFamily, v: int) -> SetFamily:
    """Sides of members of ``F`` that avoid ``v``, as a family on ``[n] - {v}``."""
    if not 1 <= v <= F.n:
        raise ValueError(f"vertex {v} outside [{F.n}]")
    ground = frozenset(range(1, F.n + 1)) - {v}
    return SetFamily(ground, (b.side_without(v) for b in F))


def rao_lift(P: SetFamily, n: int, v: int) -> BipartitionFamily:
    """Inverse of :func:`rao_reduce`."""
    expected = frozenset(range(1, n + 1)) - {v}
    if P.ground != expected:
        raise ValueError(f"ground {_fmt(P.ground)} is not [{n}] - {{{v}}}")
    return BipartitionFamily(n, (Bipartition(X, n) for X in P))
