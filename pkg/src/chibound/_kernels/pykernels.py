"""Pure-Python search kernels over bitmask adjacency.

These are the hot inner loops: k-colorability, maximum clique, and induced
embedding backtracking. The compiled module _ckernels implements the exact
same algorithms with the same tie-breaking, so either backend yields
identical results; keep the two in sync.

Common conventions:
  * adjacency is a list of Python ints, bit u of adj[v] set iff u ~ v;
  * a node budget of 0 means unbounded;
  * every entry point returns (status, payload) with status
    0 = result found, 1 = exhausted without result, 2 = budget exceeded.
"""

BACKEND_NAME = "python"


def greedy_clique(n, adj):
    """Deterministic greedy clique, used as a chromatic lower bound and to
    precolor the coloring search. Start at the highest-degree vertex, then
    repeatedly add the candidate with the most candidate neighbors; ties go
    to the lowest id. Returns vertices in pick order."""
    if n == 0:
        return []
    best_v, best_key = 0, (-1, 0)
    for v in range(n):
        key = (adj[v].bit_count(), -v)
        if key > best_key:
            best_key, best_v = key, v
    clique = [best_v]
    cand = adj[best_v]
    while cand:
        pick, pick_key = -1, (-1, 0)
        m = cand
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            key = ((adj[v] & cand).bit_count(), -v)
            if key > pick_key:
                pick_key, pick = key, v
        clique.append(pick)
        cand &= adj[pick]
    return clique


def k_color(n, adj, k, node_budget=0):
    """Decide k-colorability and return a witness.

    Saturation-driven backtracking: repeatedly color the uncolored vertex
    with the most distinctly-colored neighbors (ties: higher degree, then
    lower id), trying colors in ascending order and allowing at most one
    color beyond the current maximum. A greedy clique is precolored first.
    The first witness found is canonical given these rules.
    """
    if n == 0:
        return (0, [])
    if k <= 0:
        return (1, None)
    clique = greedy_clique(n, adj)
    if len(clique) > k:
        return (1, None)

    colors = [0] * n
    degs = [adj[v].bit_count() for v in range(n)]
    # per-vertex count of colored neighbors holding each color (1-based)
    ncount = [[0] * (k + 1) for _ in range(n)]
    nmask = [0] * n  # bit c-1 set iff some neighbor has color c

    def paint(v, c):
        colors[v] = c
        m = adj[v]
        while m:
            b = m & -m
            u = b.bit_length() - 1
            m ^= b
            ncount[u][c] += 1
            if ncount[u][c] == 1:
                nmask[u] |= 1 << (c - 1)

    def unpaint(v, c):
        colors[v] = 0
        m = adj[v]
        while m:
            b = m & -m
            u = b.bit_length() - 1
            m ^= b
            ncount[u][c] -= 1
            if ncount[u][c] == 0:
                nmask[u] &= ~(1 << (c - 1))

    for i, v in enumerate(clique):
        paint(v, i + 1)

    nodes = 0

    def rec(colored, max_used):
        nonlocal nodes
        if colored == n:
            return 0
        v, vkey = -1, None
        for u in range(n):
            if colors[u] == 0:
                key = (nmask[u].bit_count(), degs[u], -u)
                if vkey is None or key > vkey:
                    vkey, v = key, u
        limit = max_used + 1 if max_used < k else k
        avail = ~nmask[v] & ((1 << limit) - 1)
        while avail:
            b = avail & -avail
            c = b.bit_length()
            avail ^= b
            nodes += 1
            if node_budget and nodes > node_budget:
                return 2
            paint(v, c)
            r = rec(colored + 1, max_used if c <= max_used else c)
            if r == 0:
                return 0
            unpaint(v, c)
            if r == 2:
                return 2
        return 1

    status = rec(len(clique), len(clique))
    return (status, colors.copy() if status == 0 else None)


def max_clique(n, adj, node_budget=0):
    """Exact maximum clique with witness, seeded by the greedy clique.
    Candidates are consumed in ascending id order; a popcount bound prunes.
    The witness is updated only on strict improvement, so it is canonical."""
    if n == 0:
        return (0, [])
    best = sorted(greedy_clique(n, adj))
    cur = []
    nodes = 0

    def expand(cand):
        nonlocal best, nodes
        if not cand:
            if len(cur) > len(best):
                best = cur.copy()
            return 0
        while cand:
            if len(cur) + cand.bit_count() <= len(best):
                return 0
            if node_budget and nodes >= node_budget:
                return 2
            nodes += 1
            b = cand & -cand
            v = b.bit_length() - 1
            cand ^= b
            cur.append(v)
            r = expand(cand & adj[v])
            cur.pop()
            if r:
                return r
        return 0

    status = expand((1 << n) - 1)
    return (2 if status == 2 else 0, sorted(best))


def find_embedding(host_adj, pat_adj_o, parents, cands, node_budget=0):
    """First induced embedding in canonical order, or absence.

    Everything is in search-order space: position t is assigned t-th,
    pat_adj_o[t] has bit s set iff pattern positions t and s are adjacent,
    parents[t] is an earlier position adjacent to t (or -1), and cands[t]
    is the statically filtered host candidate mask for position t.
    """
    m = len(parents)
    assign = [0] * m
    used = 0
    nodes = 0
    checks = [[(s, (pat_adj_o[t] >> s) & 1) for s in range(t)] for t in range(m)]

    def rec(t):
        nonlocal used, nodes
        if t == m:
            return 0
        pool = cands[t] & ~used
        if parents[t] >= 0:
            pool &= host_adj[assign[parents[t]]]
        while pool:
            b = pool & -pool
            h = b.bit_length() - 1
            pool ^= b
            nodes += 1
            if node_budget and nodes > node_budget:
                return 2
            ham = host_adj[h]
            ok = True
            for s, want in checks[t]:
                if (ham >> assign[s]) & 1 != want:
                    ok = False
                    break
            if not ok:
                continue
            assign[t] = h
            used |= b
            r = rec(t + 1)
            used ^= b
            if r != 1:
                return r
        return 1

    status = rec(0)
    return (status, assign.copy() if status == 0 else None)


def count_embeddings(host_adj, pat_adj_o, parents, cands, node_budget=0):
    """Count all induced embeddings (labeled maps). Same search as
    find_embedding without early exit."""
    m = len(parents)
    assign = [0] * m
    used = 0
    nodes = 0
    total = 0
    checks = [[(s, (pat_adj_o[t] >> s) & 1) for s in range(t)] for t in range(m)]

    def rec(t):
        nonlocal used, nodes, total
        if t == m:
            total += 1
            return 0
        pool = cands[t] & ~used
        if parents[t] >= 0:
            pool &= host_adj[assign[parents[t]]]
        while pool:
            b = pool & -pool
            h = b.bit_length() - 1
            pool ^= b
            nodes += 1
            if node_budget and nodes > node_budget:
                return 2
            ham = host_adj[h]
            ok = True
            for s, want in checks[t]:
                if (ham >> assign[s]) & 1 != want:
                    ok = False
                    break
            if not ok:
                continue
            assign[t] = h
            used |= b
            r = rec(t + 1)
            used ^= b
            if r == 2:
                return 2
        return 0

    status = rec(0)
    return (status, total if status == 0 else None)
