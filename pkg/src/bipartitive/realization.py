"""Build a {-1, 0, 1} matrix whose HL family is a given weakly bipartitive family.

Pipeline: reduce the family to a weakly partitive set family on ``[n-1]``,
arrange its strong members in an inclusion tree, label the tree so the clans
of the resulting 2-structure are exactly the set family, and border ``M(g)``
with a row and column of ones.

Node kinds follow the usual decomposition vocabulary:

* complete: every union of children is a member; one constant label ``c``.
* linear: children are ordered and exactly the intervals are members;
  label ``a`` from an earlier child to a later one, ``b`` backwards.
* prime: no proper union of two or more children is a member; labelled by
  a primitive template (a 3-label triangle for 3 children, a path otherwise).
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from itertools import combinations, permutations, product

from .errors import AxiomError, InternalInconsistency
from .families import (
    BipartitionFamily,
    SetFamily,
    check_bipartitive,
    check_partitive,
    check_weakly_bipartitive,
    rao_reduce,
    sets_overlap,
)
from .hl import hl_family
from .l2 import L2Structure, clans, matrix_from_l2
from .matrix import ExactMatrix

__all__ = [
    "PartitiveNode",
    "PartitiveTree",
    "strong_members",
    "build_tree",
    "assign_labels",
    "realize",
    "COMPLETE_LABELS",
    "LINEAR_LABELS",
]

LEAF, COMPLETE, LINEAR, PRIME = "leaf", "complete", "linear", "prime"

COMPLETE_LABELS = (1, 0, -1)
LINEAR_LABELS = ((1, -1), (1, 0), (0, 1), (-1, 1), (0, -1), (-1, 0))
TRIANGLE_LABELS = tuple(permutations((0, 1, -1)))
PATH_LABELS = tuple((e, f) for e in (1, 0, -1) for f in (1, 0, -1) if e != f)


@dataclass(frozen=True)
class PartitiveNode:
    """A strong member. ``children`` is in linear order for linear nodes and
    sorted by smallest element otherwise."""

    members: frozenset[int]
    kind: str
    children: tuple["PartitiveNode", ...] = ()

    def internal_nodes(self) -> Iterator["PartitiveNode"]:
        if self.kind != LEAF:
            yield self
            for c in self.children:
                yield from c.internal_nodes()

    def __repr__(self) -> str:
        if self.kind == LEAF:
            return str(next(iter(self.members)))
        return f"{self.kind}({', '.join(map(repr, self.children))})"


@dataclass(frozen=True)
class PartitiveTree:
    root: PartitiveNode
    family: SetFamily = field(repr=False)

    def has_linear(self) -> bool:
        return any(u.kind == LINEAR for u in self.root.internal_nodes())


def _require_weakly_partitive(P: SetFamily) -> None:
    report = check_partitive(P, weak_only=True)
    if not report.passed:
        raise AxiomError("set family is not weakly partitive", report)


def strong_members(P: SetFamily) -> SetFamily:
    """Members overlapping no other member."""
    _require_weakly_partitive(P)
    ms = list(P)
    strong = [A for A in ms if not any(sets_overlap(A, B) for B in ms)]
    return SetFamily(P.ground, strong)


def _child_order(children: list[frozenset], P: SetFamily) -> list[int] | None:
    """Order of the children along the pair-union path, or None if not a path."""
    k = len(children)
    adj = {i: [] for i in range(k)}
    for i, j in combinations(range(k), 2):
        if children[i] | children[j] in P.members:
            adj[i].append(j)
            adj[j].append(i)
    if sum(len(v) for v in adj.values()) != 2 * (k - 1):
        return None
    ends = [i for i in range(k) if len(adj[i]) == 1]
    if len(ends) != 2 or any(len(adj[i]) > 2 for i in range(k)):
        return None
    # Children arrive sorted by smallest element, so the lower end starts.
    order = [min(ends)]
    prev = None
    while len(order) < k:
        nxt = [j for j in adj[order[-1]] if j != prev]
        if len(nxt) != 1:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return order


def _classify(children: list[frozenset], P: SetFamily) -> tuple[str, list[int]]:
    k = len(children)
    identity = list(range(k))
    if k == 2:
        return COMPLETE, identity
    present = set()
    for r in range(2, k):
        for idx in combinations(range(k), r):
            union = frozenset().union(*(children[i] for i in idx))
            if union in P.members:
                present.add(idx)
    total = sum(1 for r in range(2, k) for _ in combinations(range(k), r))
    if len(present) == total:
        return COMPLETE, identity
    if not present:
        return PRIME, identity
    order = _child_order(children, P)
    if order is not None:
        intervals = set()
        for length in range(2, k):
            for start in range(0, k - length + 1):
                intervals.add(tuple(sorted(order[start : start + length])))
        if intervals == present:
            return LINEAR, order
    raise InternalInconsistency(
        f"node {sorted(frozenset().union(*children))} fits no node kind"
    )


def build_tree(P: SetFamily) -> PartitiveTree:
    """Inclusion tree of the strong members, each internal node classified."""
    strong = sorted(strong_members(P), key=len)

    def build(node_set: frozenset) -> PartitiveNode:
        if len(node_set) == 1:
            return PartitiveNode(node_set, LEAF)
        # Maximal strong members strictly inside node_set are its children.
        inner = [S for S in strong if S < node_set]
        maximal = [S for S in inner if not any(S < T for T in inner)]
        maximal.sort(key=min)
        if frozenset().union(*maximal) != node_set:
            raise InternalInconsistency(f"children of {sorted(node_set)} do not cover it")
        kind, order = _classify(maximal, P)
        kids = tuple(build(maximal[i]) for i in order)
        return PartitiveNode(node_set, kind, kids)

    if P.ground not in P.members:
        raise InternalInconsistency("ground set missing from a weakly partitive family")
    return PartitiveTree(build(P.ground), P)


def _node_options(u: PartitiveNode, symmetric: bool) -> tuple:
    if u.kind == COMPLETE:
        return COMPLETE_LABELS
    if u.kind == LINEAR:
        if symmetric:
            raise ValueError("a symmetric labelling cannot have linear nodes")
        return LINEAR_LABELS
    if len(u.children) == 3:
        return TRIANGLE_LABELS
    return PATH_LABELS


def _quotient_label(u: PartitiveNode, slot, i: int, j: int):
    """Label from child ``i`` to child ``j`` of ``u`` (positions in ``u.children``)."""
    if u.kind == COMPLETE:
        return slot
    if u.kind == LINEAR:
        a, b = slot
        return a if i < j else b
    if len(u.children) == 3:
        t12, t23, t13 = slot
        return {frozenset((0, 1)): t12, frozenset((1, 2)): t23, frozenset((0, 2)): t13}[
            frozenset((i, j))
        ]
    edge, other = slot
    return edge if abs(i - j) == 1 else other


def _structure(root: PartitiveNode, slots: dict) -> L2Structure:
    labels = {}
    for u in root.internal_nodes():
        slot = slots[id(u)]
        for i, ci in enumerate(u.children):
            for j, cj in enumerate(u.children):
                if i == j:
                    continue
                lab = _quotient_label(u, slot, i, j)
                for x in ci.members:
                    for y in cj.members:
                        labels[(x, y)] = lab
    return L2Structure(root.members, labels)


def _greedy_slots(root: PartitiveNode, symmetric: bool) -> dict:
    slots = {}

    def visit(u: PartitiveNode, parent: PartitiveNode | None) -> None:
        options = _node_options(u, symmetric)
        choice = options[0]
        if parent is not None and parent.kind == u.kind:
            ps = slots[id(parent)]
            if u.kind == COMPLETE:
                choice = next(c for c in options if c != ps)
            elif u.kind == LINEAR:
                # A reversed pair would merge the two orders, so avoid the label set.
                choice = next(c for c in options if set(c) != set(ps))
        slots[id(u)] = choice
        for c in u.children:
            if c.kind != LEAF:
                visit(c, u)

    if root.kind != LEAF:
        visit(root, None)
    return slots


def assign_labels(tree: PartitiveTree, symmetric: bool) -> L2Structure:
    """A {-1, 0, 1}-labelled structure whose clans are exactly ``tree.family``.

    Greedy slot choice first; if its clans differ from the family, every
    combination of per-node slots is tried.
    """
    root = tree.root
    if symmetric and tree.has_linear():
        raise ValueError("a symmetric labelling cannot have linear nodes")
    target = tree.family
    g = _structure(root, _greedy_slots(root, symmetric))
    if clans(g) == target:
        return g
    nodes = list(root.internal_nodes())
    for combo in product(*(_node_options(u, symmetric) for u in nodes)):
        g = _structure(root, {id(u): s for u, s in zip(nodes, combo)})
        if clans(g) == target:
            return g
    raise InternalInconsistency("no labelling reproduces the set family")


def realize(F: BipartitionFamily) -> ExactMatrix:
    """Irreducible {-1, 0, 1} matrix with HL family ``F``; symmetric if ``F`` is bipartitive."""
    report = check_weakly_bipartitive(F)
    if not report.passed:
        raise AxiomError("family is not weakly bipartitive", report)
    n = F.n
    symmetric = check_bipartitive(F).passed
    P = rao_reduce(F, n)
    tree = build_tree(P)
    if symmetric and tree.has_linear():
        raise InternalInconsistency("bipartitive family produced a linear node")
    g = assign_labels(tree, symmetric)
    M = matrix_from_l2(g)
    rows = [list(r) + [1] for r in M.rows]
    rows.append([1] * (n - 1) + [0])
    A = ExactMatrix(rows)
    assert hl_family(A) == F
    return A
