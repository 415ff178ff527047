"""Fixed-parameter decision procedure for "rotation distance at most k".

Two elimination trees of the same graph can only disagree near vertices
whose child sets differ, so the search for a short rotation sequence is
confined to balls around those vertices.  Within each ball component,
vertices are classified by a (desired parent, trace, child multiset)
type; out of each sibling group of equal type only k+1 representatives
need to be kept.  The surviving marked set M has size independent of
vertex degrees, and an iterative-deepening search over rotations with
both endpoints in M decides the distance bound exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .elimtree import ROOT, ElimTree, RotationEdge, rotate
from .errors import (
    DisconnectedGraph,
    InvalidParameter,
    NotInComponent,
    OrderViolation,
)
from .graphs import Graph, is_connected

SAME = "same"
WANT_ROOT = "root"

Trace = tuple[int, ...]
TypeId = int


@dataclass(frozen=True)
class BadnessReport:
    """Vertices whose child set or parent differs between two trees."""

    children_bad: frozenset[int]
    parent_bad: frozenset[int]

    @property
    def bad(self) -> frozenset[int]:
        return self.children_bad | self.parent_bad


@dataclass(frozen=True)
class Ball:
    """Vertices within `radius` tree-distance of the seed set."""

    vertices: frozenset[int]
    radius: int


def classify_bad(t: ElimTree, t2: ElimTree) -> BadnessReport:
    """Compare the two trees vertex by vertex.

    The child sets are compared as sets and the parents as values, with
    the root sentinel treated like any other parent.  children_bad is
    empty exactly when the trees are equal.
    """
    cb = []
    pb = []
    for v in range(t.n):
        if t._children[v] != t2._children[v]:
            cb.append(v)
        if t.parent[v] != t2.parent[v]:
            pb.append(v)
    return BadnessReport(frozenset(cb), frozenset(pb))


def want_parent(t: ElimTree, t2: ElimTree, v: int):
    """Where v wants its parent to move: SAME, WANT_ROOT, or a vertex."""
    if t.parent[v] == t2.parent[v]:
        return SAME
    if t2.parent[v] == ROOT:
        return WANT_ROOT
    return t2.parent[v]


def compute_bcb(t: ElimTree, report: BadnessReport, k: int) -> Ball:
    """Ball of radius 2k+1 in t around the children-bad set plus the root.

    Radius 2k+1 (rather than 2k) also covers the parents of vertices
    whose subtree content an optimal sequence may consult.
    """
    if k < 1:
        raise InvalidParameter(f"k must be at least 1, got {k}")
    radius = 2 * k + 1
    seen = set(report.children_bad)
    seen.add(t.root)
    frontier = list(seen)
    children = t._children
    parent = t.parent
    for _ in range(radius):
        if not frontier:
            break
        nxt = []
        for u in frontier:
            p = parent[u]
            if p != ROOT and p not in seen:
                seen.add(p)
                nxt.append(p)
            for c in children[u]:
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return Ball(frozenset(seen), radius)


class Component:
    """One connected piece of the ball, as a subtree of t.

    zroot is the unique member closest to the root of t; every other
    member lies strictly below it.
    """

    __slots__ = ("vertices", "zroot", "tree")

    def __init__(self, tree: ElimTree, vertices: frozenset[int]):
        self.tree = tree
        self.vertices = vertices
        self.zroot = min(vertices, key=lambda v: (tree.depth(v), v))

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    def children(self, v: int) -> tuple[int, ...]:
        """Children of v that stay inside the component."""
        return tuple(c for c in self.tree.children(v) if c in self.vertices)

    def depth(self, v: int) -> int:
        """Tree distance from v up to zroot."""
        return self.tree.depth(v) - self.tree.depth(self.zroot)

    def __repr__(self) -> str:
        return f"Component(zroot={self.zroot}, size={len(self.vertices)})"


def components(t: ElimTree, ball_vertices: Iterable[int]) -> list[Component]:
    """Connected components of the ball inside t, sorted by zroot."""
    inside = set(ball_vertices)
    out = []
    todo = sorted(inside)
    seen: set[int] = set()
    for start in todo:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            p = t.parent[u]
            if p != ROOT and p in inside and p not in comp:
                comp.add(p)
                stack.append(p)
            for c in t._children[u]:
                if c in inside and c not in comp:
                    comp.add(c)
                    stack.append(c)
        seen |= comp
        out.append(Component(t, frozenset(comp)))
    out.sort(key=lambda z: z.zroot)
    return out


def check_early_no(report: BadnessReport, comps: list[Component], k: int) -> str | None:
    """Cheap certificates that the distance exceeds k, or None.

    A single rotation changes at most three child sets, so more than 3k
    children-bad vertices rule out k rotations.  And each component of
    the ball holding a bad vertex needs at least one rotation of its
    own, so more than k such components also rule them out.
    """
    if len(report.children_bad) > 3 * k:
        return (f"{len(report.children_bad)} vertices with differing child sets "
                f"exceed 3k={3 * k}")
    bad = report.bad
    dirty = sum(1 for z in comps if not bad.isdisjoint(z.vertices))
    if dirty > k:
        return f"{dirty} ball components contain differing vertices, more than k={k}"
    return None


def trace_of(g: Graph, t: ElimTree, z: Component, v: int) -> Trace:
    """Adjacency fingerprint of v against its ancestors up to zroot.

    Bit i-1 is set when some vertex of the full subtree of v in t is a
    G-neighbor of the ancestor at tree-distance i from v.  The trace of
    zroot itself is empty.
    """
    if v not in z.vertices:
        raise NotInComponent(f"vertex {v} not in component of {z.zroot}")
    anc_index: dict[int, int] = {}
    cur = v
    i = 0
    while cur != z.zroot:
        cur = t.parent[cur]
        anc_index[cur] = i
        i += 1
    if i == 0:
        return ()
    bits = [0] * i
    unset = i
    stack = [v]
    children = t._children
    while stack:
        w = stack.pop()
        for y in g._sorted[w]:
            j = anc_index.get(y)
            if j is not None and not bits[j]:
                bits[j] = 1
                unset -= 1
                if unset == 0:
                    return tuple(bits)
        stack.extend(children[w])
    return tuple(bits)


class TypeTable:
    """Interning table mapping canonical type records to small ids.

    A record is (want-parent, trace, child summary), where the child
    summary lists (child type id, count capped at k+1) pairs sorted by
    id; leaves get an empty summary.  vertex_types holds the id assigned
    to each classified vertex.
    """

    def __init__(self):
        self._records: list[tuple] = []
        self._ids: dict[tuple, TypeId] = {}
        self.vertex_types: dict[int, TypeId] = {}

    def intern(self, record: tuple) -> TypeId:
        tid = self._ids.get(record)
        if tid is None:
            tid = len(self._records)
            self._records.append(record)
            self._ids[record] = tid
        return tid

    def record_of(self, tid: TypeId) -> tuple:
        return self._records[tid]

    def __len__(self) -> int:
        return len(self._records)


def type_of(g: Graph, t: ElimTree, t2: ElimTree, z: Component, k: int,
            table: TypeTable, v: int) -> TypeId:
    """Classify v, requiring its component children to be classified."""
    if v not in z.vertices:
        raise NotInComponent(f"vertex {v} not in component of {z.zroot}")
    counts: dict[TypeId, int] = {}
    for c in z.children(v):
        tid = table.vertex_types.get(c)
        if tid is None:
            raise OrderViolation(f"child {c} of {v} has no type yet")
        counts[tid] = counts.get(tid, 0) + 1
    summary = tuple(sorted((tid, min(k + 1, c)) for tid, c in counts.items()))
    record = (want_parent(t, t2, v), trace_of(g, t, z, v), summary)
    tid = table.intern(record)
    table.vertex_types[v] = tid
    return tid


def compute_types(g: Graph, t: ElimTree, t2: ElimTree, z: Component, k: int,
                  table: TypeTable) -> None:
    """Classify every vertex of the component, deepest first."""
    for v in sorted(z.vertices, key=lambda x: (-t.depth(x), x)):
        type_of(g, t, t2, z, k, table, v)


def premark(z: Component, types: Mapping[int, TypeId], k: int) -> frozenset[int]:
    """Keep at most k+1 children per type under every component vertex.

    Groups larger than k+1 keep their k+1 lowest-numbered members; zroot
    is always kept.
    """
    kept = {z.zroot}
    for v in sorted(z.vertices):
        groups: dict[TypeId, list[int]] = {}
        for c in z.children(v):
            groups.setdefault(types[c], []).append(c)
        for tid in groups:
            kept.update(groups[tid][: k + 1])
    return frozenset(kept)


def mark(z: Component, premarked: frozenset[int], report: BadnessReport) -> frozenset[int]:
    """Grow the marked set top-down, then close over bad vertices.

    Starting from zroot, a premarked vertex joins when its component
    parent has joined.  Afterwards every children-bad vertex of the
    component joins along with all its component ancestors, whether or
    not they were premarked.
    """
    mz = {z.zroot}
    stack = [z.zroot]
    while stack:
        v = stack.pop()
        for c in z.children(v):
            if c in premarked and c not in mz:
                mz.add(c)
                stack.append(c)
    parent = z.tree.parent
    for b in report.children_bad:
        if b in z.vertices:
            cur = b
            while cur not in mz:
                mz.add(cur)
                cur = parent[cur]
    return frozenset(mz)


@dataclass(frozen=True)
class MarkedSet:
    """Premarked and marked vertices, with the per-component breakdown."""

    premarked: frozenset[int]
    marked: frozenset[int]
    per_component: dict[int, frozenset[int]]


def compute_marking(g: Graph, t: ElimTree, t2: ElimTree, k: int):
    """Run the classification pipeline, stopping before the search.

    Returns (report, ball, components, table, marking); the table and
    marking are None when an early NO certificate fires, in which case
    the certificate text is returned as a sixth element.
    """
    report = classify_bad(t, t2)
    bcb = compute_bcb(t, report, k)
    comps = components(t, bcb.vertices)
    reason = check_early_no(report, comps, k)
    if reason is not None:
        return report, bcb, comps, None, None, reason
    table = TypeTable()
    premarked: set[int] = set()
    marked: set[int] = set()
    per_comp: dict[int, frozenset[int]] = {}
    for z in comps:
        compute_types(g, t, t2, z, k, table)
        pz = premark(z, table.vertex_types, k)
        mz = mark(z, pz, report)
        premarked |= pz
        marked |= mz
        per_comp[z.zroot] = mz
    marking = MarkedSet(frozenset(premarked), frozenset(marked), per_comp)
    return report, bcb, comps, table, marking, None


@dataclass
class Decision:
    """Outcome of fpt_decide plus everything computed along the way."""

    yes: bool
    witness: tuple[RotationEdge, ...] | None
    k: int
    n: int
    early_no: str | None = None
    report: BadnessReport | None = None
    ball: Ball | None = None
    comps: list[Component] = field(default_factory=list)
    table: TypeTable | None = None
    marking: MarkedSet | None = None
    stats: dict = field(default_factory=dict)

    @property
    def marked(self) -> frozenset[int]:
        return self.marking.marked if self.marking else frozenset()

    def to_json_dict(self) -> dict:
        comps = [
            {
                "zroot": z.zroot,
                "vertices": sorted(z.vertices),
                "diameter": _component_diameter(z),
            }
            for z in self.comps
        ]
        return {
            "n": self.n,
            "k": self.k,
            "verdict": "YES" if self.yes else "NO",
            "witness": [list(e) for e in self.witness] if self.witness is not None else None,
            "children_bad": sorted(self.report.children_bad) if self.report else [],
            "parent_bad": sorted(self.report.parent_bad) if self.report else [],
            "early_no": self.early_no,
            "ball_radius": self.ball.radius if self.ball else None,
            "ball": sorted(self.ball.vertices) if self.ball else [],
            "components": comps,
            "vertex_types": {str(v): tid for v, tid in sorted(self.table.vertex_types.items())}
            if self.table else {},
            "type_count": len(self.table) if self.table else 0,
            "premarked": sorted(self.marking.premarked) if self.marking else [],
            "marked": sorted(self.marking.marked) if self.marking else [],
            "marked_per_component": {str(z): sorted(m) for z, m in self.marking.per_component.items()}
            if self.marking else {},
            "search": dict(self.stats),
        }


def _component_diameter(z: Component) -> int:
    def far(src: int) -> tuple[int, int]:
        dist = {src: 0}
        frontier = [src]
        best = (0, src)
        while frontier:
            nxt = []
            for u in frontier:
                d = dist[u] + 1
                p = z.tree.parent[u]
                nbrs = list(z.children(u))
                if p != ROOT and p in z.vertices:
                    nbrs.append(p)
                for w in nbrs:
                    if w not in dist:
                        dist[w] = d
                        best = max(best, (d, w))
                        nxt.append(w)
            frontier = nxt
        return best

    _, x = far(z.zroot)
    d, _ = far(x)
    return d


def fpt_decide(g: Graph, t: ElimTree, t2: ElimTree, k: int, *, jobs: int = 1) -> Decision:
    """Decide whether t2 is at most k rotations away from t.

    Both trees must be valid elimination trees of g (not re-checked
    here).  The verdict is exact; YES comes with a shortest rotation
    sequence over marked vertices.  `jobs` is accepted as a worker-count
    hint; the current implementation runs sequentially regardless and
    the verdict never depends on it.
    """
    if t.n != g.n or t2.n != g.n:
        raise InvalidParameter("graph and trees disagree on the vertex count")
    if k < 0:
        raise InvalidParameter(f"k must be nonnegative, got {k}")
    if not is_connected(g):
        raise DisconnectedGraph("rotation distance is defined over connected graphs")
    stats = {"nodes_expanded": 0, "memo_hits": 0}
    if t.parent == t2.parent:
        return Decision(yes=True, witness=(), k=k, n=g.n, stats=stats)
    if k == 0:
        return Decision(yes=False, witness=None, k=k, n=g.n, stats=stats,
                        early_no="trees differ and k=0 allows no rotations")
    report, bcb, comps, table, marking, reason = compute_marking(g, t, t2, k)
    if reason is not None:
        return Decision(yes=False, witness=None, k=k, n=g.n, early_no=reason,
                        report=report, ball=bcb, comps=comps, stats=stats)
    witness = _search(g, t, t2, k, marking.marked, stats)
    return Decision(yes=witness is not None, witness=witness, k=k, n=g.n,
                    report=report, ball=bcb, comps=comps, table=table,
                    marking=marking, stats=stats)


def _search(g: Graph, t: ElimTree, t2: ElimTree, k: int,
            marked: frozenset[int], stats: dict) -> tuple[RotationEdge, ...] | None:
    """Iterative-deepening search over rotations inside the marked set."""
    m_list = sorted(marked)
    target = t2.parent
    seq: list[RotationEdge] = []

    def dfs(tree: ElimTree, budget: int, memo: dict) -> bool:
        stats["nodes_expanded"] += 1
        if tree.parent == target:
            return True
        if budget == 0:
            return False
        if memo.get(tree.parent, 0) >= budget:
            stats["memo_hits"] += 1
            return False
        parent = tree.parent
        for v in m_list:
            u = parent[v]
            if u == ROOT or u not in marked:
                continue
            seq.append((u, v))
            if dfs(rotate(g, tree, (u, v)), budget - 1, memo):
                return True
            seq.pop()
        memo[tree.parent] = budget
        return False

    for budget in range(1, k + 1):
        memo: dict = {}
        if dfs(t, budget, memo):
            return tuple(seq)
        seq.clear()
    return None
