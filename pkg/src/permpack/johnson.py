"""Johnson graphs J(n, r, r-1), exact subgraphs, condensed cycles, COPs.

Vertices are r-subsets of {1..n} (frozensets); two subsets are adjacent
when they intersect in r-1 elements, the intersection being the edge
color.  A subgraph is exact when (a) colors of edges meeting at a vertex
share exactly r-2 elements and (b) every 2-path u-v-w involves r+2
elements.  In tight hosts (n = r+2) a degree-3 vertex cannot satisfy (b)
for all incident pairs -- only two outside elements exist -- so cycle
alternation and nest validation use a host-capped variant of (b) that
tolerates 2-paths involving n-1 elements when n = r+2; see
_pair_ok_capped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

Subset = frozenset[int]


@dataclass
class ExactSubgraph:
    vertices: frozenset[Subset]
    edges: tuple[tuple[Subset, Subset], ...]
    kind: str = "general"  # cycle | two_factor | nest | path | general

    def adjacency(self) -> dict[Subset, list[Subset]]:
        adj: dict[Subset, list[Subset]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


def subset_key(s) -> tuple[int, ...]:
    return tuple(sorted(s))


def subgraph_to_dict(sub: ExactSubgraph) -> dict:
    return {
        "kind": sub.kind,
        "vertices": sorted(sorted(v) for v in sub.vertices),
        "edges": sorted(sorted([sorted(u), sorted(v)]) for u, v in sub.edges),
    }


def subgraph_from_dict(data: dict) -> ExactSubgraph:
    try:
        return make_subgraph(
            [(frozenset(u), frozenset(v)) for u, v in data["edges"]],
            kind=data.get("kind", "general"),
            extra_vertices=[frozenset(v) for v in data.get("vertices", [])])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed subgraph: {exc}") from exc


def make_subgraph(edges, kind: str = "general", extra_vertices=()) -> ExactSubgraph:
    norm = []
    verts = set(frozenset(v) for v in extra_vertices)
    for u, v in edges:
        u, v = frozenset(u), frozenset(v)
        verts.update((u, v))
        norm.append((u, v))
    return ExactSubgraph(vertices=frozenset(verts), edges=tuple(norm), kind=kind)


def johnson_neighbors(n: int, r: int, u) -> list[tuple[Subset, Subset]]:
    """All (color, neighbor) pairs of the r-subset u; count r(n-r)."""
    if not 2 < r < n - 1:
        raise ValueError(f"need 2 < r < n-1, got r={r}, n={n}")
    u = frozenset(u)
    if len(u) != r or not u <= set(range(1, n + 1)):
        raise ValueError(f"not an r-subset of 1..{n}: {set(u)}")
    out = []
    for x in sorted(u):
        color = u - {x}
        for y in range(1, n + 1):
            if y not in u:
                out.append((color, color | {y}))
    return out


def is_johnson_edge(u: Subset, v: Subset) -> bool:
    return len(u & v) == len(u) - 1 and len(u) == len(v)


def _pair_ok(u: Subset, v: Subset, w: Subset) -> str | None:
    """Exactness of the 2-path u-v-w; returns a violation string or None."""
    r = len(v)
    c1, c2 = u & v, v & w
    if len(c1 & c2) != r - 2:
        return f"colors {subset_key(c1)} and {subset_key(c2)} at {subset_key(v)} share {len(c1 & c2)} != {r - 2} elements"
    if len(u | v | w) != r + 2:
        return f"path {subset_key(u)}-{subset_key(v)}-{subset_key(w)} involves {len(u | v | w)} != {r + 2} elements"
    return None


def _pair_ok_capped(n: int, u: Subset, v: Subset, w: Subset) -> str | None:
    """Host-capped exactness of the 2-path u-v-w.

    Same as _pair_ok except that when the host is tight (n = r+2) the
    element count of a 2-path may drop to n-1: with only two outside
    elements, three edges at a vertex must repeat one of them.
    """
    r = len(v)
    c1, c2 = u & v, v & w
    if len(c1 & c2) != r - 2:
        return f"colors {subset_key(c1)} and {subset_key(c2)} at {subset_key(v)} share {len(c1 & c2)} != {r - 2} elements"
    need = r + 2 if n > r + 2 else n - 1
    if len(u | v | w) < need:
        return f"path {subset_key(u)}-{subset_key(v)}-{subset_key(w)} involves {len(u | v | w)} < {need} elements"
    return None


def is_exact(n: int, r: int, sub: ExactSubgraph) -> tuple[bool, str | None]:
    """Literal exactness check; on failure returns the offending witness."""
    universe = set(range(1, n + 1))
    for u, v in sub.edges:
        if len(u) != r or len(v) != r or not (u | v) <= universe:
            return False, f"edge {subset_key(u)}-{subset_key(v)} is not between r-subsets of 1..{n}"
        if not is_johnson_edge(u, v):
            return False, f"{subset_key(u)} and {subset_key(v)} are not adjacent in the Johnson graph"
    adj = sub.adjacency()
    for v, nbrs in adj.items():
        for u, w in combinations(nbrs, 2):
            bad = _pair_ok(u, v, w)
            if bad is not None:
                return False, bad
    return True, None


def expand_cc(cc, r: int) -> ExactSubgraph:
    """Cycle on the width-r cyclic windows of the element sequence cc."""
    elems = tuple(cc)
    m = len(elems)
    if m < r + 2:
        raise ValueError(f"condensed cycle needs at least r+2 = {r + 2} elements, got {m}")
    if len(set(elems)) != m:
        raise ValueError(f"condensed cycle has repeated elements: {elems}")
    windows = [frozenset(elems[(i + k) % m] for k in range(r)) for i in range(m)]
    if len(set(windows)) != m:
        raise ValueError(f"condensed cycle {elems} has repeated windows")
    edges = tuple((windows[i], windows[(i + 1) % m]) for i in range(m))
    return ExactSubgraph(vertices=frozenset(windows), edges=edges, kind="cycle")


def expand_cop(cop, n: int) -> set[Subset]:
    """r-subsets {i, i+d1, i+d1+d2, ...} mod n for every start i."""
    parts = tuple(cop)
    if sum(parts) != n or any(d < 1 for d in parts):
        raise ValueError(f"parts {parts} are not a composition of {n}")
    out = set()
    for start in range(1, n + 1):
        subset = []
        acc = start
        for d in (0,) + parts[:-1]:
            acc += d
            subset.append((acc - 1) % n + 1)
        out.add(frozenset(subset))
    return out


def parse_cop(text: str) -> tuple[int, ...]:
    """'1213' -> (1, 2, 1, 3); comma form accepted for multi-digit parts."""
    if "," in text:
        return tuple(int(tok) for tok in text.split(","))
    return tuple(int(ch) for ch in text)


def alternate_cops(cop_a, cop_b, n: int) -> ExactSubgraph | None:
    """Search for an exact cycle alternating the subsets of the two COPs.

    Returns None when exhaustive backtracking finds no exact alternation.
    """
    fam_a = sorted(expand_cop(cop_a, n), key=subset_key)
    fam_b = sorted(expand_cop(cop_b, n), key=subset_key)
    if len(fam_a) != len(fam_b) or set(fam_a) & set(fam_b):
        return None
    m = len(fam_a)
    start = fam_a[0]

    path = [start]
    used_a = {start}
    used_b: set[Subset] = set()

    def dfs() -> bool:
        if len(path) == 2 * m:
            return (is_johnson_edge(path[-1], path[0])
                    and _pair_ok_capped(n, path[-2], path[-1], path[0]) is None
                    and _pair_ok_capped(n, path[-1], path[0], path[1]) is None)
        pool, used = (fam_b, used_b) if len(path) % 2 else (fam_a, used_a)
        for cand in pool:
            if cand in used:
                continue
            if not is_johnson_edge(path[-1], cand):
                continue
            if len(path) >= 2 and _pair_ok_capped(n, path[-2], path[-1], cand) is not None:
                continue
            path.append(cand)
            used.add(cand)
            if dfs():
                return True
            used.remove(cand)
            path.pop()
        return False

    if not dfs():
        return None
    edges = tuple((path[i], path[(i + 1) % (2 * m)]) for i in range(2 * m))
    return ExactSubgraph(vertices=frozenset(path), edges=edges, kind="cycle")


def search_exact_2factor(n: int, r: int, max_vertices: int = 40) -> ExactSubgraph | None:
    """Exhaustive search for an exact spanning 2-regular subgraph of J(n, r, r-1).

    Deterministic: vertices and candidate edges are scanned in
    lexicographic order, so identical inputs yield identical certificates.
    Returns None only after complete enumeration.
    """
    from math import comb

    if comb(n, r) > max_vertices:
        raise ValueError(f"instance too large: C({n},{r}) = {comb(n, r)} > {max_vertices}")
    verts = sorted((frozenset(c) for c in combinations(range(1, n + 1), r)), key=subset_key)
    nbrs = {v: sorted((w for _, w in johnson_neighbors(n, r, v)), key=subset_key) for v in verts}
    order = {v: i for i, v in enumerate(verts)}
    degree = {v: 0 for v in verts}
    chosen: dict[Subset, list[Subset]] = {v: [] for v in verts}
    edges: list[tuple[Subset, Subset]] = []

    def can_add(u: Subset, v: Subset) -> bool:
        # exactness is local to 2-paths: check the new edge against every
        # edge already chosen at either endpoint
        for w in chosen[u]:
            if _pair_ok(w, u, v) is not None:
                return False
        for w in chosen[v]:
            if _pair_ok(u, v, w) is not None:
                return False
        return True

    def add(u, v):
        chosen[u].append(v)
        chosen[v].append(u)
        degree[u] += 1
        degree[v] += 1
        edges.append((u, v))

    def remove(u, v):
        chosen[u].pop()
        chosen[v].pop()
        degree[u] -= 1
        degree[v] -= 1
        edges.pop()

    def dfs() -> bool:
        pivot = None
        for v in verts:
            if degree[v] < 2:
                pivot = v
                break
        if pivot is None:
            return True
        for w in nbrs[pivot]:
            if degree[w] >= 2 or w in chosen[pivot]:
                continue
            # avoid double counting: only let the pivot initiate edges to
            # later vertices unless the partner already has one edge slot
            # committed; ordering on (pivot, w) pairs keeps the search
            # canonical either way
            if order[w] < order[pivot] and degree[w] == 0:
                continue
            if not can_add(pivot, w):
                continue
            add(pivot, w)
            if dfs():
                return True
            remove(pivot, w)
        return False

    if dfs():
        return ExactSubgraph(vertices=frozenset(verts), edges=tuple(edges), kind="two_factor")
    return None


def validate_nest(n: int, r: int, sub: ExactSubgraph) -> tuple[bool, str]:
    """Check the nest conditions: spanning, max degree 3, unicyclic
    caterpillar components, and host-capped exactness of every 2-path
    (see _pair_ok_capped)."""
    from math import comb

    if len(sub.vertices) != comb(n, r):
        return False, f"not spanning: {len(sub.vertices)} of {comb(n, r)} vertices"
    for u, v in sub.edges:
        if not is_johnson_edge(u, v):
            return False, f"{subset_key(u)}-{subset_key(v)} is not a Johnson edge"
    adj = sub.adjacency()
    if any(len(set(nb)) != len(nb) for nb in adj.values()):
        return False, "repeated edge"
    maxdeg = max(len(nb) for nb in adj.values())
    if maxdeg > 3:
        return False, f"degree {maxdeg} > 3"

    # component structure: unicyclic, and deleting pendant vertices leaves a cycle
    seen: set[Subset] = set()
    components: list[set[Subset]] = []
    for v in sub.vertices:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        components.append(comp)
    for comp in components:
        ecount = sum(1 for u, v in sub.edges if u in comp)
        if ecount != len(comp):
            return False, f"component of size {len(comp)} has {ecount} edges (not unicyclic)"
        core = {v for v in comp if len(adj[v]) >= 2}
        if not core:
            return False, "component has no cycle core"
        for v in core:
            if sum(1 for w in adj[v] if w in core) != 2:
                return False, f"core of component is not a cycle at {subset_key(v)}"

    for v, nbrs in adj.items():
        for u, w in combinations(nbrs, 2):
            bad = _pair_ok_capped(n, u, v, w)
            if bad is not None:
                return False, bad
    return True, "nest"


def successor_orientations(sub: ExactSubgraph):
    """Yield successor maps (vertex -> out-neighbor) with out-degree 1.

    Pendant vertices point at their unique neighbor; each cycle core can
    run in either direction.
    """
    adj = sub.adjacency()
    core = {v for v in sub.vertices if len(adj[v]) >= 2}
    succ_base: dict[Subset, Subset] = {}
    for v in sub.vertices - core:
        if len(adj[v]) != 1:
            return
        succ_base[v] = adj[v][0]
    # decompose the core into cycles
    cycles: list[list[Subset]] = []
    seen: set[Subset] = set()
    for v in sorted(core, key=subset_key):
        if v in seen:
            continue
        cyc = [v]
        seen.add(v)
        prev, cur = None, v
        while True:
            nxts = [w for w in adj[cur] if w in core and w != prev]
            if not nxts:
                break
            prev, cur = cur, nxts[0]
            if cur == v:
                break
            cyc.append(cur)
            seen.add(cur)
        cycles.append(cyc)

    def emit(i, succ):
        if i == len(cycles):
            yield dict(succ)
            return
        cyc = cycles[i]
        m = len(cyc)
        for direction in (1, -1):
            for k in range(m):
                succ[cyc[k]] = cyc[(k + direction) % m]
            yield from emit(i + 1, succ)

    yield from emit(0, dict(succ_base))
