"""Simple undirected graphs on dense integer vertex ids.

Vertices are 0..n-1. Adjacency is stored as one Python int bitmask per
vertex, which the search kernels consume directly. Graphs are immutable:
every operation returns new values.
"""

from dataclasses import dataclass


class Graph:
    """Finite simple graph. No loops, no multi-edges, symmetric adjacency."""

    __slots__ = ("_n", "_adj")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge endpoint out of range: {(u, v)} with n={n}")
            if u == v:
                raise ValueError(f"self-loop not allowed: {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._adj = tuple(adj)

    @property
    def n(self):
        return self._n

    def adjacency_mask(self, v):
        """Neighbors of v as a bitmask (bit u set iff u adjacent to v)."""
        return self._adj[self._check(v)]

    def adjacency_masks(self):
        return self._adj

    def neighbors(self, v):
        return frozenset(_bits(self._adj[self._check(v)]))

    def degree(self, v):
        return self._adj[self._check(v)].bit_count()

    def has_edge(self, u, v):
        self._check(u)
        self._check(v)
        return (self._adj[u] >> v) & 1 == 1

    def edges(self):
        """Edges as (u, v) pairs with u < v, lexicographic order."""
        out = []
        for u in range(self._n):
            m = self._adj[u] >> (u + 1)
            for off in _bits(m):
                out.append((u, u + 1 + off))
        return out

    @property
    def edge_count(self):
        return sum(m.bit_count() for m in self._adj) // 2

    def vertices(self):
        return range(self._n)

    def _check(self, v):
        if not (0 <= v < self._n):
            raise ValueError(f"vertex {v} out of range for n={self._n}")
        return v

    def __eq__(self, other):
        return isinstance(other, Graph) and self._n == other._n and self._adj == other._adj

    def __hash__(self):
        return hash((self._n, self._adj))

    def __repr__(self):
        return f"Graph(n={self._n}, m={self.edge_count})"


@dataclass(frozen=True)
class LevelDecomposition:
    """Distance classes from a source vertex: levels[i] holds the vertices
    at distance exactly i. Unreachable vertices appear in no level."""

    source: int
    levels: tuple


def _bits(mask):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def bits(mask):
    """Iterate set bit positions of a mask, ascending."""
    return _bits(mask)


def set_to_mask(s):
    m = 0
    for v in s:
        m |= 1 << v
    return m


def mask_to_set(mask):
    return frozenset(_bits(mask))


def check_vertex_set(g, s):
    """Validate s against g and return it as a frozenset."""
    out = frozenset(s)
    for v in out:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return out


def neighborhood(g, v, r, mode="exact"):
    """N^r(v) when mode is "exact", N^r[v] when mode is "ball"."""
    g._check(v)
    if r < 0:
        raise ValueError(f"radius must be non-negative, got {r}")
    if mode not in ("exact", "ball"):
        raise ValueError(f"unknown mode {mode!r}")
    seen = 1 << v
    frontier = 1 << v
    for _ in range(r):
        nxt = 0
        for u in _bits(frontier):
            nxt |= g.adjacency_mask(u)
        frontier = nxt & ~seen
        seen |= frontier
        if not frontier:
            break
    return mask_to_set(seen) if mode == "ball" else mask_to_set(frontier)


def distance(g, u, v):
    """Length of a shortest u-v path, or None when unreachable."""
    g._check(u)
    g._check(v)
    if u == v:
        return 0
    seen = 1 << u
    frontier = 1 << u
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for w in _bits(frontier):
            nxt |= g.adjacency_mask(w)
        frontier = nxt & ~seen
        if (frontier >> v) & 1:
            return d
        seen |= frontier
    return None


def components(g):
    """Connected components as vertex sets, ordered by smallest member."""
    out = []
    seen = 0
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.adjacency_mask(u)
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(mask_to_set(comp))
    return out


def is_connected_set(g, s):
    """True iff the subgraph induced on s is connected. The empty set
    counts as connected; callers needing nonemptiness check it first."""
    s = frozenset(s)
    if not s:
        return True
    smask = set_to_mask(s)
    start = min(s)
    comp = 1 << start
    frontier = 1 << start
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= g.adjacency_mask(u) & smask
        frontier = nxt & ~comp
        comp |= frontier
    return comp == smask


def components_within(g, s):
    """Components of the subgraph induced on s, by smallest member, as
    subsets of the original vertex ids."""
    s = frozenset(s)
    smask = set_to_mask(s)
    out = []
    seen = 0
    for v in sorted(s):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.adjacency_mask(u) & smask
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(mask_to_set(comp))
    return out


def induced_subgraph(g, s):
    """Subgraph induced on s plus the relabeling.

    Returns (h, old_ids) where old_ids[i] is the original id of vertex i of
    h. Old ids are taken in ascending order, so the relabeling is canonical.
    """
    old_ids = tuple(sorted(check_vertex_set(g, s)))
    index = {v: i for i, v in enumerate(old_ids)}
    edges = []
    for i, v in enumerate(old_ids):
        m = g.adjacency_mask(v)
        for u in old_ids[i + 1:]:
            if (m >> u) & 1:
                edges.append((i, index[u]))
    return Graph(len(old_ids), edges), old_ids


def covers(g, a, b):
    """True iff every vertex of b has a neighbor in a. The sets must be
    disjoint; overlap is a precondition error, not False."""
    a = check_vertex_set(g, a)
    b = check_vertex_set(g, b)
    if a & b:
        raise ValueError(f"covers() requires disjoint sets; common vertices {sorted(a & b)}")
    amask = set_to_mask(a)
    return all(g.adjacency_mask(v) & amask for v in b)


def level_decomposition(g, v):
    """BFS distance classes from v, up to the eccentricity of v within its
    component."""
    g._check(v)
    levels = [frozenset({v})]
    seen = 1 << v
    frontier = 1 << v
    while True:
        nxt = 0
        for u in _bits(frontier):
            nxt |= g.adjacency_mask(u)
        frontier = nxt & ~seen
        if not frontier:
            break
        seen |= frontier
        levels.append(mask_to_set(frontier))
    return LevelDecomposition(source=v, levels=tuple(levels))
