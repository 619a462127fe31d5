"""Tree representation and structural analysis.

Vertices are dense integers ``0..n-1``.  A vertex is either *regular* or
*trans-shipment*; the latter kind can be crossed by pebbles but never
occupied at rest.  ``Tree`` is immutable; restricted views produced by
:meth:`Tree.without` share the underlying adjacency and filter it lazily.

The analysis in :func:`analyze` partitions the edges into corridors
(maximal paths whose interior vertices have degree two) and derives the
feasibility constant ``c`` -- the number of holes needed for any instance
on the tree to be solvable -- together with its regular-vertex-counting
analogue ``c_tilde`` used by the trans-shipment variant.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import InsufficientCandidates


class Tree:
    """Immutable undirected tree with per-vertex kinds.

    Raises ``ValueError`` unless the edge list describes a connected
    acyclic graph, every trans-shipment vertex has degree >= 2, and no
    two trans-shipment vertices are adjacent.
    """

    __slots__ = ("n", "adj", "_ts", "_profile")

    def __init__(self, n, edges, trans_shipment=()):
        if n < 1:
            raise ValueError("tree needs at least one vertex")
        if len(edges) != n - 1:
            raise ValueError(f"tree on {n} vertices needs {n - 1} edges, got {len(edges)}")
        nbrs = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"bad edge ({u}, {v})")
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.adj = tuple(tuple(sorted(ws)) for ws in nbrs)
        self.n = n
        ts = frozenset(trans_shipment)
        for s in ts:
            if not 0 <= s < n:
                raise ValueError(f"bad trans-shipment vertex {s}")
            if len(self.adj[s]) < 2:
                raise ValueError(f"trans-shipment vertex {s} has degree < 2")
            if any(w in ts for w in self.adj[s]):
                raise ValueError(f"adjacent trans-shipment vertices at {s}")
        self._ts = ts
        self._profile = None
        # connectivity; n-1 edges + connected => acyclic
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for w in self.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        if count != n:
            raise ValueError("edge list does not describe a connected tree")

    # -- tree-like interface (shared with TreeView) --

    def vertices(self):
        return range(self.n)

    def vertex_count(self):
        return self.n

    def has_vertex(self, v):
        return 0 <= v < self.n

    def neighbors(self, v):
        return self.adj[v]

    def degree(self, v):
        return len(self.adj[v])

    def is_trans_shipment(self, v):
        return v in self._ts

    @property
    def trans_shipment_vertices(self):
        return self._ts

    def is_regular(self, v):
        return v not in self._ts

    def without(self, removed):
        """Restricted view of this tree with ``removed`` vertices masked out."""
        return TreeView(self, frozenset(removed))

    def __repr__(self):
        return f"Tree(n={self.n}, ts={sorted(self._ts)})"


class TreeView:
    """Lazily filtered view of a :class:`Tree` minus a vertex set.

    Only meaningful when the remaining vertices stay connected (the PMT
    pipeline removes leaves, which preserves connectivity, hence also the
    uniqueness of paths between surviving vertices).
    """

    __slots__ = ("base", "removed", "_profile", "_nbr_cache")

    def __init__(self, base, removed):
        self.base = base
        self.removed = removed
        self._profile = None
        self._nbr_cache = {}

    def vertices(self):
        return (v for v in self.base.vertices() if v not in self.removed)

    def vertex_count(self):
        return self.base.n - len(self.removed)

    def has_vertex(self, v):
        return self.base.has_vertex(v) and v not in self.removed

    def neighbors(self, v):
        ws = self._nbr_cache.get(v)
        if ws is None:
            ws = tuple(w for w in self.base.adj[v] if w not in self.removed)
            self._nbr_cache[v] = ws
        return ws

    def degree(self, v):
        return len(self.neighbors(v))

    def is_trans_shipment(self, v):
        return self.base.is_trans_shipment(v)

    @property
    def trans_shipment_vertices(self):
        return self.base.trans_shipment_vertices - self.removed

    def is_regular(self, v):
        return self.base.is_regular(v)

    def without(self, removed):
        return TreeView(self.base, self.removed | frozenset(removed))

    def __repr__(self):
        return f"TreeView(base={self.base!r}, removed={sorted(self.removed)})"


@dataclass(frozen=True)
class CorridorProfile:
    """Corridor decomposition and feasibility constants of one tree.

    ``corridors`` lists each corridor once as a vertex path; lengths are
    edge counts (``d`` metric) while the ``*_tilde`` variants count regular
    vertices on the corridor (``d~`` metric).  ``c2``/``c2_tilde`` are zero
    when no corridor has junctions at both endpoints.
    """

    corridors: tuple
    junction_corridors: tuple
    c1: int
    c2: int
    c: int
    c1_tilde: int
    c2_tilde: int
    c_tilde: int
    diameter: int
    is_path: bool
    junctions: frozenset = field(repr=False)


def analyze(tree):
    """Compute the :class:`CorridorProfile` of ``tree`` (Tree or TreeView).

    The result is cached on the tree object.
    """
    if tree._profile is not None:
        return tree._profile

    verts = list(tree.vertices())
    deg = {v: tree.degree(v) for v in verts}
    junctions = frozenset(v for v in verts if deg[v] > 2)
    is_path = not junctions

    corridors = []
    seen_edges = set()
    terminals = [v for v in verts if deg[v] != 2]
    for a in terminals:
        for first in tree.neighbors(a):
            if (a, first) in seen_edges:
                continue
            path = [a, first]
            seen_edges.add((a, first))
            seen_edges.add((first, a))
            prev, cur = a, first
            while deg[cur] == 2:
                nxt = next(w for w in tree.neighbors(cur) if w != prev)
                seen_edges.add((cur, nxt))
                seen_edges.add((nxt, cur))
                path.append(nxt)
                prev, cur = cur, nxt
            corridors.append(tuple(path))
    # each corridor is discovered from both terminal ends; keep one copy
    uniq = {}
    for path in corridors:
        key = path if path[0] <= path[-1] else path[::-1]
        uniq[key] = key
    corridors = tuple(sorted(uniq))

    def reg_count(path):
        return sum(1 for v in path if tree.is_regular(v))

    junction_corridors = tuple(
        p for p in corridors if p[0] in junctions and p[-1] in junctions
    )
    c1 = max((len(p) - 1 for p in corridors), default=0)
    c2 = max((len(p) - 1 for p in junction_corridors), default=0)
    c1t = max((reg_count(p) for p in corridors), default=0)
    c2t = max((reg_count(p) for p in junction_corridors), default=0)
    if is_path:
        c, ct = c1, c1t
    else:
        c, ct = max(c1 + 1, c2 + 2), max(c1t + 1, c2t + 2)

    profile = CorridorProfile(
        corridors=corridors,
        junction_corridors=junction_corridors,
        c1=c1,
        c2=c2,
        c=c,
        c1_tilde=c1t,
        c2_tilde=c2t,
        c_tilde=ct,
        diameter=_diameter(tree, verts),
        is_path=is_path,
        junctions=junctions,
    )
    tree._profile = profile
    return profile


def _diameter(tree, verts):
    if len(verts) <= 1:
        return 0
    far, _ = _farthest(tree, verts[0])
    _, diam = _farthest(tree, far)
    return diam


def _farthest(tree, source):
    dist = distances_from(tree, source)
    v, d = max(dist.items(), key=lambda kv: (kv[1], -kv[0]))
    return v, d


def distances_from(tree, source):
    """BFS edge-distances from ``source`` over the (possibly masked) tree."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in tree.neighbors(u):
            if w not in dist:
                dist[w] = du + 1
                queue.append(w)
    return dist


def distances_to_set(tree, anchors):
    """Multi-source BFS distances ``d(v, anchors)`` for every reachable v."""
    dist = {a: 0 for a in anchors}
    queue = deque(dist)
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in tree.neighbors(u):
            if w not in dist:
                dist[w] = du + 1
                queue.append(w)
    return dist


def path_between(tree, a, b):
    """The unique vertex path from ``a`` to ``b``, inclusive of both ends."""
    if a == b:
        return (a,)
    parent = {a: a}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            break
        for w in tree.neighbors(u):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    if b not in parent:
        raise ValueError(f"no path between {a} and {b}")
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return tuple(path)


def distance(tree, a, b):
    """Edge count of the unique a-b path."""
    return len(path_between(tree, a, b)) - 1


def regular_path_count(tree, path):
    """The d~ metric: number of regular vertices on a vertex path."""
    return sum(1 for v in path if tree.is_regular(v))


def forest_component(tree, removed, anchor):
    """Vertex set of the component of ``tree`` minus ``removed`` containing ``anchor``."""
    if removed == anchor:
        raise ValueError("anchor must differ from the removed vertex")
    comp = {anchor}
    queue = deque([anchor])
    while queue:
        u = queue.popleft()
        for w in tree.neighbors(u):
            if w != removed and w not in comp:
                comp.add(w)
                queue.append(w)
    return frozenset(comp)


def closest_subset(tree, candidates, anchors, q):
    """The ``q`` candidates with smallest summed distance to ``anchors``.

    The objective sum_{w in W} d(w, anchors) is separable per vertex, so
    picking the q individually closest candidates is exact.  Ties break
    toward the lowest vertex id; the result is sorted by (distance, id).
    """
    cands = sorted(candidates)
    if q > len(cands):
        raise InsufficientCandidates(f"asked for {q} of {len(cands)} candidates")
    if q == 0:
        return ()
    dist = distances_to_set(tree, anchors)
    ranked = sorted(cands, key=lambda v: (dist[v], v))
    return tuple(ranked[:q])


def is_connected_subtree(tree, vertex_set):
    """True when ``vertex_set`` induces a connected subtree."""
    if not vertex_set:
        return True
    vs = set(vertex_set)
    start = next(iter(vs))
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in tree.neighbors(u):
            if w in vs and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen == vs
