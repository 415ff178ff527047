"""Undirected simple graphs on vertex set {0, ..., n-1}.

Vertices are dense integer ids.  Graphs are immutable once built; all
iteration orders (neighbors, edges) are sorted so that every algorithm
downstream is deterministic.
"""

from __future__ import annotations

import json
import random
from typing import Iterable

from .errors import InvalidParameter, InvalidVertex, SelfLoop

Edge = tuple[int, int]


class Graph:
    """An undirected simple graph with a fixed vertex count."""

    __slots__ = ("n", "_sets", "_sorted", "names")

    def __init__(self, n: int, edges: Iterable[Edge], names: tuple[str, ...] | None = None):
        if n < 1:
            raise InvalidParameter(f"graph needs at least one vertex, got n={n}")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise InvalidVertex(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            sets[u].add(v)
            sets[v].add(u)
        self.n = n
        self._sets = tuple(frozenset(s) for s in sets)
        self._sorted = tuple(tuple(sorted(s)) for s in sets)
        self.names = names

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of v in ascending order."""
        self._check(v)
        return self._sorted[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._sets[u]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._sets[v])

    def edges(self) -> tuple[Edge, ...]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        return tuple((u, v) for u in range(self.n) for v in self._sorted[u] if u < v)

    @property
    def m(self) -> int:
        return sum(len(s) for s in self._sets) // 2

    def _check(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise InvalidVertex(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._sets == other._sets

    def __hash__(self) -> int:
        return hash((self.n, self._sets))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[Edge], names: tuple[str, ...] | None = None) -> Graph:
    """Build a graph from an edge list; duplicates and orientation collapse."""
    return Graph(n, edges, names)


def is_connected(g: Graph) -> bool:
    """True iff g has exactly one connected component."""
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in g._sorted[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n


def ball(g: Graph, seeds: Iterable[int], radius: int) -> frozenset[int]:
    """All vertices of g within the given distance of some seed."""
    if radius < 0:
        raise InvalidParameter(f"radius must be nonnegative, got {radius}")
    frontier = []
    seen = set()
    for s in seeds:
        if not (0 <= s < g.n):
            raise InvalidVertex(f"seed {s} out of range for n={g.n}")
        if s not in seen:
            seen.add(s)
            frontier.append(s)
    for _ in range(radius):
        if not frontier:
            break
        nxt = []
        for u in frontier:
            for w in g._sorted[u]:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(seen)


# ---------------------------------------------------------------------------
# generators

FAMILIES = ("path", "cycle", "star", "complete", "complete_split", "random_connected")


def generate(family: str, n: int, *, seed: int | None = None, p: float = 0.2,
             clique: int | None = None) -> Graph:
    """Build a named family member on n vertices.

    `random_connected` draws a random spanning tree and keeps each extra
    edge with probability p; it requires a seed so runs are reproducible.
    `complete_split` is a clique on the first `clique` vertices (default
    (n+1)//2) joined completely to an independent set on the rest.
    """
    if n < 1:
        raise InvalidParameter(f"n must be positive, got {n}")
    if family == "path":
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        if n < 3:
            raise InvalidParameter(f"cycle needs n >= 3, got {n}")
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "star":
        return Graph(n, [(0, i) for i in range(1, n)])
    if family == "complete":
        return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if family == "complete_split":
        c = (n + 1) // 2 if clique is None else clique
        if not (1 <= c <= n):
            raise InvalidParameter(f"clique size {c} out of range for n={n}")
        edges = [(i, j) for i in range(c) for j in range(i + 1, c)]
        edges += [(i, j) for i in range(c) for j in range(c, n)]
        return Graph(n, edges)
    if family == "random_connected":
        if seed is None:
            raise InvalidParameter("random_connected requires a seed")
        rng = random.Random(seed)
        order = list(range(n))
        rng.shuffle(order)
        edges = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
        tree = set(frozenset(e) for e in edges)
        for u in range(n):
            for v in range(u + 1, n):
                if frozenset((u, v)) not in tree and rng.random() < p:
                    edges.append((u, v))
        return Graph(n, edges)
    raise InvalidParameter(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# JSON files: {"n": int, "edges": [[u, v], ...], "names": optional list}

def to_json_dict(g: Graph) -> dict:
    d: dict = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if g.names is not None:
        d["names"] = list(g.names)
    return d


def from_json_dict(d: dict) -> Graph:
    try:
        n = int(d["n"])
        raw = d["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidParameter(f"malformed graph object: {exc}") from exc
    names = tuple(str(x) for x in d["names"]) if "names" in d else None
    index = {name: i for i, name in enumerate(names)} if names else {}

    def resolve(x) -> int:
        if isinstance(x, str):
            if x not in index:
                raise InvalidVertex(f"unknown vertex name {x!r}")
            return index[x]
        return int(x)

    edges = [(resolve(u), resolve(v)) for u, v in raw]
    return Graph(n, edges, names)


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return from_json_dict(json.load(fh))


def save_graph(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_json_dict(g), fh, indent=2)
        fh.write("\n")
