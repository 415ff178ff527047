"""Brute-force machinery over the rotation graph of all elimination trees.

Nodes are parent-vector keys; arcs are single rotations.  Everything
here is exponential and exists to give exact ground truth on small
instances, so vertex-count caps guard each entry point.
"""

from __future__ import annotations

import itertools
import json
from typing import Iterable

from .elimtree import ElimTree, RotationEdge, from_ordering, rotate
from .errors import InstanceTooLarge
from .graphs import Graph

TreeKey = tuple[int, ...]

DEFAULT_ENUM_CAP = 10
BFS_CAP_REQUIRED_ABOVE = 12


class _OverCap:
    """Singleton returned when a capped search gives up."""

    def __repr__(self) -> str:
        return "OVER_CAP"

    def __bool__(self) -> bool:
        return False


OVER_CAP = _OverCap()


def neighbors(g: Graph, t: ElimTree) -> list[tuple[RotationEdge, ElimTree]]:
    """All single-rotation successors, ordered by rotated child vertex."""
    out = []
    for v in range(t.n):
        u = t.parent[v]
        if u >= 0:
            out.append(((u, v), rotate(g, t, (u, v))))
    return out


class FlipGraph:
    """The full rotation graph of one input graph.

    trees maps each key to its tree; adj maps each key to its outgoing
    (edge, key) pairs in rotation order.
    """

    def __init__(self, g: Graph, trees: dict[TreeKey, ElimTree],
                 adj: dict[TreeKey, tuple[tuple[RotationEdge, TreeKey], ...]]):
        self.g = g
        self.trees = trees
        self.adj = adj

    def __len__(self) -> int:
        return len(self.trees)

    def nodes(self) -> list[TreeKey]:
        return sorted(self.trees)

    def distances_from(self, key: TreeKey) -> dict[TreeKey, int]:
        """BFS distance map from one node to every node."""
        dist = {key: 0}
        frontier = [key]
        while frontier:
            nxt = []
            for k in frontier:
                d = dist[k] + 1
                for _, k2 in self.adj[k]:
                    if k2 not in dist:
                        dist[k2] = d
                        nxt.append(k2)
            frontier = nxt
        return dist


def enumerate_all(g: Graph, cap: int = DEFAULT_ENUM_CAP) -> FlipGraph:
    """Breadth-first enumeration of every elimination tree of g."""
    if g.n > cap:
        raise InstanceTooLarge(f"refusing to enumerate trees for n={g.n} > cap={cap}")
    start = from_ordering(g, list(range(g.n)))
    trees: dict[TreeKey, ElimTree] = {start.key(): start}
    adj: dict[TreeKey, tuple[tuple[RotationEdge, TreeKey], ...]] = {}
    frontier = [start]
    while frontier:
        nxt = []
        for t in frontier:
            arcs = []
            for edge, t2 in neighbors(g, t):
                k2 = t2.key()
                arcs.append((edge, k2))
                if k2 not in trees:
                    trees[k2] = t2
                    nxt.append(t2)
            adj[t.key()] = tuple(arcs)
        frontier = nxt
    return FlipGraph(g, trees, adj)


def enumerate_orderings(g: Graph, cap: int = DEFAULT_ENUM_CAP) -> set[TreeKey]:
    """Distinct trees over all n! elimination orderings.

    Independent of the rotation machinery; kept as a cross-check oracle
    for enumerate_all.
    """
    if g.n > cap:
        raise InstanceTooLarge(f"refusing {g.n}! orderings with n={g.n} > cap={cap}")
    return {from_ordering(g, perm).key() for perm in itertools.permutations(range(g.n))}


def _bfs(g: Graph, t: ElimTree, t2: ElimTree, cap: int | None,
         allowed: frozenset[int] | None, want_path: bool):
    if t.n > BFS_CAP_REQUIRED_ABOVE and cap is None:
        raise InstanceTooLarge(
            f"n={t.n} > {BFS_CAP_REQUIRED_ABOVE}: bfs search requires an explicit cap")
    target = t2.key()
    start = t.key()
    if start == target:
        return (0, []) if want_path else 0
    pred: dict[TreeKey, tuple[TreeKey, RotationEdge]] = {}

    def path_to(key: TreeKey) -> list[RotationEdge]:
        seq: list[RotationEdge] = []
        while key != start:
            prev, edge = pred[key]
            seq.append(edge)
            key = prev
        seq.reverse()
        return seq

    seen = {start}
    frontier = [t]
    depth = 0
    while frontier and (cap is None or depth < cap):
        depth += 1
        nxt = []
        for cur in frontier:
            for v in range(cur.n):
                u = cur.parent[v]
                if u < 0:
                    continue
                if allowed is not None and (u not in allowed or v not in allowed):
                    continue
                t3 = rotate(g, cur, (u, v))
                k3 = t3.key()
                if k3 in seen:
                    continue
                seen.add(k3)
                if want_path:
                    pred[k3] = (cur.key(), (u, v))
                if k3 == target:
                    return (depth, path_to(k3)) if want_path else depth
                nxt.append(t3)
        frontier = nxt
    return (OVER_CAP, None) if want_path else OVER_CAP


def bfs_distance(g: Graph, t: ElimTree, t2: ElimTree, cap: int | None = None):
    """Exact rotation distance, or OVER_CAP if above the given cap."""
    return _bfs(g, t, t2, cap, None, False)


def bfs_witness(g: Graph, t: ElimTree, t2: ElimTree, cap: int | None = None):
    """(distance, shortest rotation sequence), or (OVER_CAP, None)."""
    return _bfs(g, t, t2, cap, None, True)


def restricted_bfs_distance(g: Graph, t: ElimTree, t2: ElimTree,
                            allowed: Iterable[int], cap: int | None = None):
    """Shortest sequence whose every rotated edge stays inside `allowed`.

    OVER_CAP when no such sequence exists within the cap (or at all).
    """
    return _bfs(g, t, t2, cap, frozenset(allowed), False)


def diameter(g: Graph, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Largest rotation distance between any two elimination trees of g."""
    fg = enumerate_all(g, cap=cap)
    best = 0
    for key in fg.trees:
        dist = fg.distances_from(key)
        assert len(dist) == len(fg.trees), "rotation graph must be connected"
        best = max(best, max(dist.values()))
    return best


# ---------------------------------------------------------------------------
# exports

def to_dot(fg: FlipGraph) -> str:
    """GraphViz rendering; one node per tree, one edge per rotation."""
    nodes = fg.nodes()
    index = {k: i for i, k in enumerate(nodes)}
    lines = ["graph rotations {"]
    for k in nodes:
        label = ",".join(str(p) for p in k)
        lines.append(f'  t{index[k]} [label="({label})"];')
    seen = set()
    for k in nodes:
        for _, k2 in fg.adj[k]:
            a, b = index[k], index[k2]
            if (min(a, b), max(a, b)) not in seen:
                seen.add((min(a, b), max(a, b)))
                lines.append(f"  t{min(a, b)} -- t{max(a, b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(fg: FlipGraph) -> dict:
    nodes = fg.nodes()
    index = {k: i for i, k in enumerate(nodes)}
    edges = sorted(
        {(min(index[k], index[k2]), max(index[k], index[k2]))
         for k in nodes for _, k2 in fg.adj[k]}
    )
    return {
        "n": fg.g.n,
        "nodes": [list(k) for k in nodes],
        "edges": [list(e) for e in edges],
    }


def save_json(fg: FlipGraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_json_dict(fg), fh, indent=2)
        fh.write("\n")


def save_dot(fg: FlipGraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_dot(fg))
