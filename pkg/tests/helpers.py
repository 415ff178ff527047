"""Shared utilities for the test suite."""

from __future__ import annotations

import itertools
import random

from rotdist import ElimTree, Graph, from_edge_list, from_ordering, is_connected

# number of connected graphs on 1..5 labeled-iso-free vertices
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21}


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on n vertices, one per isomorphism class."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    perms = list(itertools.permutations(range(n)))
    seen = set()
    out = []
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        g = from_edge_list(n, edges)
        if not is_connected(g):
            continue
        canon = min(
            tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges))
            for p in perms
        )
        if canon in seen:
            continue
        seen.add(canon)
        out.append(g)
    return out


def random_tree(g: Graph, rng: random.Random) -> ElimTree:
    order = list(range(g.n))
    rng.shuffle(order)
    return from_ordering(g, order)


def random_tree_edge(t: ElimTree, rng: random.Random) -> tuple[int, int]:
    v = rng.choice([v for v in range(t.n) if t.parent[v] != -1])
    return t.parent[v], v


def preorder(t: ElimTree) -> list[int]:
    return list(t.descendants(t.root))


def tree_distance_matrix(t: ElimTree) -> list[list[int]]:
    """All-pairs distances inside the tree itself (not the rotation graph)."""
    n = t.n
    adj = [[] for _ in range(n)]
    for v in range(n):
        p = t.parent[v]
        if p != -1:
            adj[v].append(p)
            adj[p].append(v)
    out = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        out.append(dist)
    return out


def inversions_between(p: list[int], q: list[int]) -> int:
    """Pairs ordered one way in p and the other way in q."""
    pos = {v: i for i, v in enumerate(q)}
    count = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if pos[p[i]] > pos[p[j]]:
                count += 1
    return count
