"""Induced subgraph search: anchored embedding, counting, and the
two-pattern starriness test.

Embeddings are labeled injective maps preserving both adjacency and
non-adjacency. The backtracking order is canonical (DFS from the anchor or
from a highest-degree pattern vertex, host candidates ascending), so the
first witness is deterministic across runs and kernel backends.
"""

from dataclasses import dataclass

from . import _kernels
from .errors import SearchBudgetExceeded
from .graphs import bits
from .trees import binary_star, bristled_star


@dataclass(frozen=True)
class Embedding:
    """mapping[p] is the host vertex carrying pattern vertex p."""

    mapping: tuple

    def to_json_list(self):
        return [[p, h] for p, h in enumerate(self.mapping)]

    @staticmethod
    def from_json_list(pairs):
        mapping = [-1] * len(pairs)
        for p, h in pairs:
            mapping[p] = h
        return Embedding(mapping=tuple(mapping))


@dataclass(frozen=True)
class StarryCertificate:
    k: int
    d: int
    binary_embedding: Embedding
    bristled_embedding: Embedding


def verify_embedding(host, pattern, emb):
    """Re-check an embedding edge by edge and non-edge by non-edge."""
    m = emb.mapping
    if len(m) != pattern.n:
        return False
    if len(set(m)) != len(m):
        return False
    if any(not 0 <= h < host.n for h in m):
        return False
    for u in range(pattern.n):
        for v in range(u + 1, pattern.n):
            if pattern.has_edge(u, v) != host.has_edge(m[u], m[v]):
                return False
    return True


def _bfs_dist(g, start):
    dist = [-1] * g.n
    dist[start] = 0
    frontier = [start]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in bits(g.adjacency_mask(u)):
                if dist[w] < 0:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def _pattern_components(pattern):
    seen = [False] * pattern.n
    comps = []
    for v in range(pattern.n):
        if seen[v]:
            continue
        comp = []
        stack = [v]
        seen[v] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in bits(pattern.adjacency_mask(u)):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _dfs_order(pattern, root, comp_set):
    """Preorder (vertex, parent) pairs from root, neighbors ascending."""
    out = []
    visited = set()

    def visit(v, par):
        visited.add(v)
        out.append((v, par))
        for w in sorted(bits(pattern.adjacency_mask(v))):
            if w in comp_set and w not in visited:
                visit(w, v)

    visit(root, -1)
    return out


def _search_plan(host, pattern, anchor):
    """Order pattern vertices and build static candidate masks.

    Returns (order, parents, cands) in search-order space. Static filters:
    host degree at least pattern degree everywhere, the anchor pinned to a
    single host vertex, and, within the anchor's pattern component, host
    distance from the anchor host no larger than pattern distance from the
    anchor vertex.
    """
    hn, pn = host.n, pattern.n
    host_deg = [host.adjacency_mask(v).bit_count() for v in range(hn)]
    pat_deg = [pattern.adjacency_mask(v).bit_count() for v in range(pn)]

    deg_ok = [0] * pn
    for p in range(pn):
        m = 0
        for h in range(hn):
            if host_deg[h] >= pat_deg[p]:
                m |= 1 << h
        deg_ok[p] = m

    comps = _pattern_components(pattern)
    anchor_p = anchor[0] if anchor is not None else None

    keyed = []
    for comp in comps:
        if anchor_p is not None and anchor_p in comp:
            keyed.append((0, anchor_p, comp))
        else:
            root = max(comp, key=lambda v: (pat_deg[v], -v))
            keyed.append((1, root, comp))
    keyed.sort(key=lambda item: (item[0], item[1]))

    pairs = []
    for _, root, comp in keyed:
        pairs.extend(_dfs_order(pattern, root, set(comp)))

    order = [v for v, _ in pairs]
    pos_of = {v: t for t, (v, _) in enumerate(pairs)}
    parents = [-1 if par < 0 else pos_of[par] for _, par in pairs]

    cands = [deg_ok[v] for v in order]
    if anchor is not None:
        ap, ah = anchor
        t0 = pos_of[ap]
        if not (cands[t0] >> ah) & 1:
            cands[t0] = 0
        else:
            cands[t0] = 1 << ah
        hdist = _bfs_dist(host, ah)
        pdist = _bfs_dist(pattern, ap)
        for t, v in enumerate(order):
            if pdist[v] < 0:
                continue  # other component, no distance constraint
            allowed = 0
            for h in bits(cands[t]):
                if 0 <= hdist[h] <= pdist[v]:
                    allowed |= 1 << h
            cands[t] = allowed
    return order, parents, cands


def find_induced_embedding(host, pattern, anchor=None, node_budget=None):
    """First induced embedding of pattern in host, or None.

    anchor, when given, is a (pattern_vertex, host_vertex) pair that the
    embedding must respect. Raises SearchBudgetExceeded when a node budget
    is given and exhausted; that outcome is indeterminate, not absence.
    """
    if anchor is not None:
        ap, ah = anchor
        if not (0 <= ap < pattern.n):
            raise ValueError(f"anchor pattern vertex {ap} out of range")
        host._check(ah)
    if pattern.n > host.n:
        return None
    if pattern.n == 0:
        return Embedding(mapping=())
    order, parents, cands = _search_plan(host, pattern, anchor)
    pat_adj_o = _order_space_adj(pattern, order)
    status, assign = _kernels.find_embedding(
        list(host.adjacency_masks()), pat_adj_o, parents, cands, node_budget or 0
    )
    if status == 2:
        raise SearchBudgetExceeded("induced embedding")
    if status == 1:
        return None
    mapping = [-1] * pattern.n
    for t, v in enumerate(order):
        mapping[v] = assign[t]
    return Embedding(mapping=tuple(mapping))


def _order_space_adj(pattern, order):
    pos_of = {v: t for t, v in enumerate(order)}
    out = []
    for v in order:
        m = 0
        for w in bits(pattern.adjacency_mask(v)):
            m |= 1 << pos_of[w]
        out.append(m)
    return out


def count_induced_embeddings(host, pattern, node_budget=None):
    """Exact number of labeled induced embeddings. Automorphic images
    count separately."""
    if pattern.n > host.n:
        return 0
    if pattern.n == 0:
        return 1
    order, parents, cands = _search_plan(host, pattern, None)
    pat_adj_o = _order_space_adj(pattern, order)
    status, total = _kernels.count_embeddings(
        list(host.adjacency_masks()), pat_adj_o, parents, cands, node_budget or 0
    )
    if status == 2:
        raise SearchBudgetExceeded("embedding count")
    return total


def is_kd_starry(host, k, d, node_budget=None):
    """Both star patterns with parameters (k, d) as induced subgraphs.

    Returns a StarryCertificate carrying one embedding of each pattern, or
    None when either is missing. A budget exhaustion propagates as
    SearchBudgetExceeded (indeterminate)."""
    if k < 1 or d < 1:
        raise ValueError(f"k and d must be positive, got k={k}, d={d}")
    emb_binary = find_induced_embedding(host, binary_star(k, d), node_budget=node_budget)
    if emb_binary is None:
        return None
    emb_bristled = find_induced_embedding(host, bristled_star(k, d), node_budget=node_budget)
    if emb_bristled is None:
        return None
    return StarryCertificate(
        k=k, d=d, binary_embedding=emb_binary, bristled_embedding=emb_bristled
    )
