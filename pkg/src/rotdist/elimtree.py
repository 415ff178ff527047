"""Elimination trees of a connected graph, and the rotation move on them.

An elimination tree of a connected graph G is a rooted tree on V(G);
removing the root must split G into the components hanging below it,
recursively.  Equivalently: every G-edge joins an ancestor-descendant
pair, and every subtree induces a connected subgraph of G.

Trees are stored as immutable parent vectors (-1 marks the root) so a
tree doubles as its own hashable key.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Sequence

from .errors import (
    DisconnectedGraph,
    InvalidOrdering,
    InvalidTree,
    InvalidVertex,
    NotATreeEdge,
)
from .graphs import Graph, is_connected

ROOT = -1

RotationEdge = tuple[int, int]


class ElimTree:
    """A rooted spanning tree encoded by its parent vector."""

    __slots__ = ("parent", "root", "_children", "_depth", "_tin", "_tout")

    def __init__(self, parent: Sequence[int]):
        par = tuple(parent)
        n = len(par)
        buckets: list[list[int]] = [[] for _ in range(n)]
        root = ROOT
        for v, p in enumerate(par):
            if p == ROOT:
                if root != ROOT:
                    raise InvalidTree(f"two roots: {root} and {v}")
                root = v
            elif 0 <= p < n:
                buckets[p].append(v)
            else:
                raise InvalidTree(f"parent {p} of vertex {v} out of range")
        if root == ROOT:
            raise InvalidTree("no root (-1 entry) in parent vector")
        self.parent = par
        self.root = root
        self._children = tuple(tuple(b) for b in buckets)
        self._depth: tuple[int, ...] | None = None
        self._tin: tuple[int, ...] | None = None
        self._tout: tuple[int, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.parent)

    def children(self, v: int) -> tuple[int, ...]:
        """Children of v in ascending order."""
        return self._children[v]

    def key(self) -> tuple[int, ...]:
        """Canonical hashable key: the parent vector itself."""
        return self.parent

    def depth(self, v: int) -> int:
        if self._depth is None:
            self._fill_depth()
        return self._depth[v]

    def _fill_depth(self) -> None:
        depth = [0] * self.n
        stack = [self.root]
        while stack:
            u = stack.pop()
            d = depth[u] + 1
            for c in self._children[u]:
                depth[c] = d
                stack.append(c)
        self._depth = tuple(depth)

    def ancestors(self, v: int) -> Iterator[int]:
        """v, parent(v), ..., root."""
        while v != ROOT:
            yield v
            v = self.parent[v]

    def descendants(self, v: int) -> Iterator[int]:
        """All vertices of the subtree rooted at v, preorder."""
        stack = [v]
        while stack:
            u = stack.pop()
            yield u
            stack.extend(self._children[u])

    def _fill_euler(self) -> None:
        tin = [0] * self.n
        tout = [0] * self.n
        clock = 0
        stack: list[tuple[int, bool]] = [(self.root, False)]
        while stack:
            u, closing = stack.pop()
            if closing:
                tout[u] = clock
                continue
            tin[u] = clock
            clock += 1
            stack.append((u, True))
            for c in self._children[u]:
                stack.append((c, False))
        self._tin = tuple(tin)
        self._tout = tuple(tout)

    def is_ancestor(self, a: int, v: int) -> bool:
        """True iff a is an ancestor of v (every vertex is its own ancestor)."""
        if self._tin is None:
            self._fill_euler()
        return self._tin[a] <= self._tin[v] and self._tin[v] < self._tout[a]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ElimTree):
            return NotImplemented
        return self.parent == other.parent

    def __hash__(self) -> int:
        return hash(self.parent)

    def __repr__(self) -> str:
        return f"ElimTree({list(self.parent)!r})"


def from_parent_vector(parent: Sequence[int]) -> ElimTree:
    """Build a tree from an untrusted parent vector.

    Beyond the single-root check done by the constructor, verify that
    every vertex is reachable from the root (no cycles among parents).
    """
    t = ElimTree(parent)
    count = 0
    stack = [t.root]
    while stack:
        u = stack.pop()
        count += 1
        stack.extend(t._children[u])
    if count != t.n:
        raise InvalidTree("parent vector contains a cycle")
    return t


def equals(a: ElimTree, b: ElimTree) -> bool:
    """Exact equality: same root and same parent everywhere."""
    return a.parent == b.parent


def from_ordering(g: Graph, order: Sequence[int]) -> ElimTree:
    """Elimination tree produced by eliminating vertices in `order`.

    The first vertex of the order within each recursive component
    becomes that component's root.
    """
    n = g.n
    if sorted(order) != list(range(n)):
        raise InvalidOrdering(f"order is not a permutation of 0..{n - 1}")
    if not is_connected(g):
        raise DisconnectedGraph("elimination trees are defined for connected graphs")
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    parent = [ROOT] * n
    # Each work item is a component (as a set) plus the parent its root
    # will attach to.
    work: list[tuple[set[int], int]] = [(set(range(n)), ROOT)]
    while work:
        verts, up = work.pop()
        r = min(verts, key=lambda v: pos[v])
        parent[r] = up
        verts.discard(r)
        while verts:
            start = next(iter(verts))
            comp = {start}
            stack = [start]
            while stack:
                u = stack.pop()
                for w in g._sorted[u]:
                    if w in verts and w not in comp:
                        comp.add(w)
                        stack.append(w)
            verts -= comp
            work.append((comp, r))
    return ElimTree(parent)


def validity_violations(g: Graph, t: ElimTree, limit: int = 20) -> list[str]:
    """Everything wrong with t as an elimination tree of g.

    Two conditions are checked on top of the structural ones: every
    G-edge joins an ancestor-descendant pair, and every non-root subtree
    has a G-edge to its parent.  Given the first condition, the second
    is equivalent to every subtree inducing a connected subgraph.
    """
    out: list[str] = []
    if t.n != g.n:
        return [f"tree has {t.n} vertices, graph has {g.n}"]
    count = sum(1 for _ in t.descendants(t.root))
    if count != t.n:
        return ["parent vector contains a cycle"]
    if t._tin is None:
        t._fill_euler()
    tin, tout = t._tin, t._tout
    for u, v in g.edges():
        if len(out) >= limit:
            break
        anc = (tin[u] <= tin[v] < tout[u]) or (tin[v] <= tin[u] < tout[v])
        if not anc:
            out.append(f"edge ({u},{v}) joins incomparable vertices")
    for v in range(t.n):
        if len(out) >= limit:
            break
        kids = t._children[v]
        if not kids:
            continue
        kids = sorted(kids, key=lambda c: tin[c])
        hit = set()
        for y in g._sorted[v]:
            if tin[v] <= tin[y] < tout[v]:
                # y lies below v; find which child subtree holds it
                lo, hi = 0, len(kids) - 1
                while lo < hi:
                    mid = (lo + hi + 1) // 2
                    if tin[kids[mid]] <= tin[y]:
                        lo = mid
                    else:
                        hi = mid - 1
                hit.add(kids[lo])
        for c in kids:
            if c not in hit:
                out.append(f"subtree at {c} has no edge to its parent {v}")
                if len(out) >= limit:
                    break
    return out


def validate(g: Graph, t: ElimTree) -> bool:
    """True iff t is an elimination tree of g."""
    return not validity_violations(g, t)


def rotate(g: Graph, t: ElimTree, edge: RotationEdge) -> ElimTree:
    """Rotate the tree edge (u, v), where u is the parent of v.

    v takes u's place (u's old parent, or the root); u becomes a child
    of v; u keeps its other children; each old child subtree of v moves
    under u exactly when it has a G-edge to u, otherwise it stays under
    v.  The move is an involution: rotating (v, u) afterwards undoes it.
    """
    u, v = edge
    n = t.n
    if not (0 <= u < n and 0 <= v < n):
        raise InvalidVertex(f"rotation edge ({u},{v}) out of range for n={n}")
    if t.parent[v] != u:
        raise NotATreeEdge(f"({u},{v}) is not a tree edge with parent {u}", edge=edge)
    newpar = list(t.parent)
    newpar[v] = t.parent[u]
    newpar[u] = v
    adj_u = g._sets[u]
    children = t._children
    for w in children[v]:
        stack = [w]
        while stack:
            x = stack.pop()
            if x in adj_u:
                newpar[w] = u
                break
            stack.extend(children[x])
    return ElimTree(newpar)


def apply_sequence(g: Graph, t: ElimTree, seq: Iterable[RotationEdge]) -> ElimTree:
    """Apply rotations left to right; report the failing step if any."""
    cur = t
    for i, edge in enumerate(seq, start=1):
        u, v = edge
        if not (0 <= u < cur.n and 0 <= v < cur.n) or cur.parent[v] != u:
            raise NotATreeEdge(
                f"step {i}: ({u},{v}) is not a tree edge", edge=edge, step=i
            )
        cur = rotate(g, cur, edge)
    return cur


# ---------------------------------------------------------------------------
# JSON files: {"parent": [p_0, ..., p_{n-1}]}, -1 for the root

def to_json_dict(t: ElimTree) -> dict:
    return {"parent": list(t.parent)}


def from_json_dict(d: dict) -> ElimTree:
    try:
        parent = [int(p) for p in d["parent"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidTree(f"malformed tree object: {exc}") from exc
    return from_parent_vector(parent)


def load_tree(path: str) -> ElimTree:
    with open(path, "r", encoding="utf-8") as fh:
        return from_json_dict(json.load(fh))


def save_tree(t: ElimTree, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_json_dict(t), fh, indent=2)
        fh.write("\n")
