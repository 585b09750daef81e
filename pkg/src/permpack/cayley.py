"""Cayley graphs of S_n generated by transposition trees.

The graph is implicit: vertices are permutations, and the neighbor along
tree edge (i, j) swaps the contents of positions i and j.  For a
diameter-3 tree with hub degrees r and t, deleting the hub-hub edge
splits the graph into C(n, r) components, one per r-subset of values
occupying the hub-r-side positions.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations

from .perms import Perm, identity, swap_positions

Edge = tuple[int, int]

ORIGINAL = "original"
RENUMBERED = "renumbered"


@dataclass(frozen=True)
class TranspositionTree:
    """A tree on vertices 1..n whose edges generate S_n as transpositions.

    epsilon is the hub-hub edge of a diameter-3 tree (None for stars).
    r, t are the hub degrees when the tree has diameter 3.
    """

    n: int
    edges: tuple[Edge, ...]
    epsilon: Edge | None = None
    r: int | None = None
    t: int | None = None
    numbering: str | None = None

    def __post_init__(self):
        verts = set()
        for i, j in self.edges:
            if not (1 <= i <= self.n and 1 <= j <= self.n and i != j):
                raise ValueError(f"bad edge {(i, j)} for n={self.n}")
            verts.update((i, j))
        if len(self.edges) != self.n - 1 or (self.n > 1 and verts != set(range(1, self.n + 1))):
            raise ValueError("edges do not form a spanning tree")
        if self.epsilon is not None and self.epsilon not in self.edges:
            raise ValueError(f"epsilon {self.epsilon} is not a tree edge")

    @property
    def left_positions(self) -> frozenset[int]:
        """Tree vertices on the hub-r side; {1..r} under both numberings."""
        if self.r is None:
            raise ValueError("left side defined only for diameter-3 trees")
        return frozenset(range(1, self.r + 1))

    @property
    def hub_left(self) -> int:
        if self.r is None:
            raise ValueError("hubs defined only for diameter-3 trees")
        return self.r if self.numbering == ORIGINAL else 1

    @property
    def hub_right(self) -> int:
        if self.r is None:
            raise ValueError("hubs defined only for diameter-3 trees")
        return self.r + 1


def _edge(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


def tree_diameter(n: int, edges) -> int:
    adj = {v: [] for v in range(1, n + 1)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)

    def farthest(src):
        dist = {src: 0}
        queue = deque([src])
        far = src
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    if dist[v] > dist[far]:
                        far = v
                    queue.append(v)
        return far, dist[far]

    a, _ = farthest(1)
    _, d = farthest(a)
    return d


def build_tree(r: int, t: int, numbering: str = ORIGINAL) -> TranspositionTree:
    """The diameter-3 tree with hub degrees r and t on n = r + t vertices."""
    if r < 2 or t < 2:
        raise ValueError(f"no diameter-3 tree with hub degrees r={r}, t={t}")
    n = r + t
    if numbering == ORIGINAL:
        hub_l, hub_r = r, r + 1
        left_leaves = range(1, r)
        right_leaves = range(r + 2, n + 1)
    elif numbering == RENUMBERED:
        hub_l, hub_r = 1, r + 1
        left_leaves = range(2, r + 1)
        right_leaves = range(r + 2, n + 1)
    else:
        raise ValueError(f"unknown numbering {numbering!r}")
    edges = [_edge(hub_l, hub_r)]
    edges += [_edge(v, hub_l) for v in left_leaves]
    edges += [_edge(v, hub_r) for v in right_leaves]
    edges = tuple(sorted(edges))
    tree = TranspositionTree(n=n, edges=edges, epsilon=_edge(hub_l, hub_r),
                             r=r, t=t, numbering=numbering)
    assert tree_diameter(n, edges) == 3
    return tree


def star_tree(n: int, hub: int = 1) -> TranspositionTree:
    """The star K_{1,n-1} with the given hub vertex."""
    if n < 2:
        raise ValueError("star tree needs n >= 2")
    edges = tuple(sorted(_edge(hub, v) for v in range(1, n + 1) if v != hub))
    return TranspositionTree(n=n, edges=edges)


def neighbors(tree: TranspositionTree, g: Perm) -> list[tuple[Edge, Perm]]:
    if len(g) != tree.n:
        raise ValueError(f"degree mismatch: permutation of degree {len(g)} in X with n={tree.n}")
    return [(e, swap_positions(g, *e)) for e in tree.edges]


def closed_sphere(tree: TranspositionTree, g: Perm) -> frozenset[Perm]:
    """{g} together with all its neighbors; size n."""
    return frozenset([g] + [h for _, h in neighbors(tree, g)])


def graph_distance(tree: TranspositionTree, g: Perm, h: Perm) -> int:
    if g == h:
        return 0
    dist = {g: 0}
    queue = deque([g])
    while queue:
        u = queue.popleft()
        for e in tree.edges:
            v = swap_positions(u, *e)
            if v not in dist:
                if v == h:
                    return dist[u] + 1
                dist[v] = dist[u] + 1
                queue.append(v)
    raise AssertionError("Cayley graph of a tree is connected")


def ball2(tree: TranspositionTree, g: Perm) -> frozenset[Perm]:
    """All vertices at distance <= 2 from g."""
    out = set([g])
    for _, h in neighbors(tree, g):
        out.add(h)
        for _, w in neighbors(tree, h):
            out.add(w)
    return frozenset(out)


def component_of(tree: TranspositionTree, g: Perm) -> frozenset[int]:
    """Values occupying the hub-r-side positions of g."""
    return frozenset(g[p - 1] for p in tree.left_positions)


def all_components(tree: TranspositionTree) -> list[frozenset[int]]:
    return [frozenset(c) for c in combinations(range(1, tree.n + 1), tree.r)]


def component_type(tree: TranspositionTree, values) -> int:
    """Number of pairs {i, r+i} fully contained in the component's value set."""
    if tree.r != tree.t:
        raise ValueError("component types are defined only for r = t")
    values = set(values)
    return sum(1 for i in range(1, tree.r + 1) if i in values and tree.r + i in values)


def enumerate_component(tree: TranspositionTree, values):
    """All r!t! vertices whose left-side values equal the given r-subset."""
    values = set(values)
    if len(values) != tree.r or not values <= set(range(1, tree.n + 1)):
        raise ValueError(f"not an r-subset of values: {values}")
    right = sorted(set(range(1, tree.n + 1)) - values)
    for left_word in permutations(sorted(values)):
        for right_word in permutations(right):
            yield left_word + right_word


def component_distance(tree: TranspositionTree, g: Perm, h: Perm) -> int:
    """Distance inside the epsilon-free component containing g."""
    if component_of(tree, g) != component_of(tree, h):
        raise ValueError("vertices lie in different components")
    non_eps = [e for e in tree.edges if e != tree.epsilon]
    if g == h:
        return 0
    dist = {g: 0}
    queue = deque([g])
    while queue:
        u = queue.popleft()
        for e in non_eps:
            v = swap_positions(u, *e)
            if v not in dist:
                if v == h:
                    return dist[u] + 1
                dist[v] = dist[u] + 1
                queue.append(v)
    raise AssertionError("component is connected without epsilon")


def translate(x: Perm, g: Perm) -> Perm:
    """The color-preserving automorphism g -> x o g (value relabeling by x)."""
    return tuple(x[v - 1] for v in g)


def num_vertices(tree: TranspositionTree) -> int:
    return math.factorial(tree.n)
