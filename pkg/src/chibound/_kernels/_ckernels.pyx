# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the pure-Python kernels.

Same algorithms, same tie-breaking, same node accounting as pykernels.py;
any behavioral change must be made in both files. Bitsets are arrays of
64-bit words so hosts larger than 64 vertices work.
"""

from libc.stdlib cimport calloc, malloc, free
from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long)
    int __builtin_ctzll(unsigned long long)

BACKEND_NAME = "c"


cdef inline int _bs_popcount(uint64_t* row, int nw):
    cdef int i, c = 0
    for i in range(nw):
        c += __builtin_popcountll(row[i])
    return c


cdef inline bint _bs_empty(uint64_t* row, int nw):
    cdef int i
    for i in range(nw):
        if row[i]:
            return False
    return True


cdef inline int _bs_lowest(uint64_t* row, int nw):
    # lowest set bit index; -1 when empty
    cdef int i
    for i in range(nw):
        if row[i]:
            return i * 64 + __builtin_ctzll(row[i])
    return -1


cdef inline bint _bs_test(uint64_t* row, int v):
    return (row[v >> 6] >> (v & 63)) & 1


cdef uint64_t* _load_masks(object masks, int count, int nw) except NULL:
    cdef uint64_t* arr = <uint64_t*> calloc(<size_t>count * nw, sizeof(uint64_t))
    if arr == NULL:
        raise MemoryError()
    cdef int i, w
    cdef object m
    for i in range(count):
        m = masks[i]
        w = 0
        while m:
            arr[i * nw + w] = <uint64_t>(m & 0xFFFFFFFFFFFFFFFF)
            m >>= 64
            w += 1
    return arr


cdef list _greedy_clique_c(int n, uint64_t* adj, int nw):
    cdef int best_v = 0, best_deg = -1, v, d, pick, pick_cnt, cnt, i, w
    cdef uint64_t word
    for v in range(n):
        d = _bs_popcount(adj + v * nw, nw)
        if d > best_deg:
            best_deg = d
            best_v = v
    cdef list clique = [best_v]
    cdef uint64_t* cand = <uint64_t*> malloc(nw * sizeof(uint64_t))
    if cand == NULL:
        raise MemoryError()
    for i in range(nw):
        cand[i] = adj[best_v * nw + i]
    while not _bs_empty(cand, nw):
        pick = -1
        pick_cnt = -1
        for w in range(nw):
            word = cand[w]
            while word:
                v = w * 64 + __builtin_ctzll(word)
                word &= word - 1
                cnt = 0
                for i in range(nw):
                    cnt += __builtin_popcountll(adj[v * nw + i] & cand[i])
                if cnt > pick_cnt:
                    pick_cnt = cnt
                    pick = v
        clique.append(pick)
        for i in range(nw):
            cand[i] &= adj[pick * nw + i]
    free(cand)
    return clique


def greedy_clique(n, adj):
    if n == 0:
        return []
    cdef int nw = (n + 63) >> 6
    cdef uint64_t* a = _load_masks(adj, n, nw)
    try:
        return _greedy_clique_c(n, a, nw)
    finally:
        free(a)


# ---------------------------------------------------------------- k_color

cdef struct KCtx:
    int n
    int k
    int nw
    uint64_t* adj
    int* colors
    int* degs
    int* ncount      # n * (k+1)
    int* satcount
    long long nodes
    long long budget


cdef inline void _paint(KCtx* cx, int v, int c):
    cdef int w, u
    cdef uint64_t word
    cx.colors[v] = c
    for w in range(cx.nw):
        word = cx.adj[v * cx.nw + w]
        while word:
            u = w * 64 + __builtin_ctzll(word)
            word &= word - 1
            cx.ncount[u * (cx.k + 1) + c] += 1
            if cx.ncount[u * (cx.k + 1) + c] == 1:
                cx.satcount[u] += 1


cdef inline void _unpaint(KCtx* cx, int v, int c):
    cdef int w, u
    cdef uint64_t word
    cx.colors[v] = 0
    for w in range(cx.nw):
        word = cx.adj[v * cx.nw + w]
        while word:
            u = w * 64 + __builtin_ctzll(word)
            word &= word - 1
            cx.ncount[u * (cx.k + 1) + c] -= 1
            if cx.ncount[u * (cx.k + 1) + c] == 0:
                cx.satcount[u] -= 1


cdef int _kc_rec(KCtx* cx, int colored, int max_used):
    if colored == cx.n:
        return 0
    cdef int v = -1, u, c, limit, r
    cdef int bsat = -1, bdeg = -1
    for u in range(cx.n):
        if cx.colors[u] == 0:
            if cx.satcount[u] > bsat or (cx.satcount[u] == bsat and cx.degs[u] > bdeg):
                bsat = cx.satcount[u]
                bdeg = cx.degs[u]
                v = u
    limit = max_used + 1 if max_used < cx.k else cx.k
    for c in range(1, limit + 1):
        if cx.ncount[v * (cx.k + 1) + c] != 0:
            continue
        cx.nodes += 1
        if cx.budget and cx.nodes > cx.budget:
            return 2
        _paint(cx, v, c)
        r = _kc_rec(cx, colored + 1, max_used if c <= max_used else c)
        if r == 0:
            return 0
        _unpaint(cx, v, c)
        if r == 2:
            return 2
    return 1


def k_color(n, adj, k, node_budget=0):
    if n == 0:
        return (0, [])
    if k <= 0:
        return (1, None)
    cdef int nw = (n + 63) >> 6
    cdef uint64_t* a = _load_masks(adj, n, nw)
    cdef list clique = _greedy_clique_c(n, a, nw)
    if len(clique) > k:
        free(a)
        return (1, None)
    cdef KCtx cx
    cx.n = n
    cx.k = k
    cx.nw = nw
    cx.adj = a
    cx.nodes = 0
    cx.budget = node_budget
    cx.colors = <int*> calloc(n, sizeof(int))
    cx.degs = <int*> calloc(n, sizeof(int))
    cx.ncount = <int*> calloc(<size_t>n * (k + 1), sizeof(int))
    cx.satcount = <int*> calloc(n, sizeof(int))
    if cx.colors == NULL or cx.degs == NULL or cx.ncount == NULL or cx.satcount == NULL:
        free(a); free(cx.colors); free(cx.degs); free(cx.ncount); free(cx.satcount)
        raise MemoryError()
    cdef int i, status
    for i in range(n):
        cx.degs[i] = _bs_popcount(a + i * nw, nw)
    for i in range(len(clique)):
        _paint(&cx, clique[i], i + 1)
    status = _kc_rec(&cx, len(clique), len(clique))
    result = [cx.colors[i] for i in range(n)] if status == 0 else None
    free(a); free(cx.colors); free(cx.degs); free(cx.ncount); free(cx.satcount)
    return (status, result)


# -------------------------------------------------------------- max_clique

cdef struct MCtx:
    int n
    int nw
    uint64_t* adj
    uint64_t* stack   # (n+1) levels of candidate masks
    int* cur
    int* best
    int best_len
    long long nodes
    long long budget


cdef int _mc_expand(MCtx* cx, int level, int cur_len):
    cdef uint64_t* cand = cx.stack + level * cx.nw
    cdef uint64_t* nxt = cx.stack + (level + 1) * cx.nw
    cdef int i, v, r
    if _bs_empty(cand, cx.nw):
        if cur_len > cx.best_len:
            cx.best_len = cur_len
            for i in range(cur_len):
                cx.best[i] = cx.cur[i]
        return 0
    while not _bs_empty(cand, cx.nw):
        if cur_len + _bs_popcount(cand, cx.nw) <= cx.best_len:
            return 0
        if cx.budget and cx.nodes >= cx.budget:
            return 2
        cx.nodes += 1
        v = _bs_lowest(cand, cx.nw)
        cand[v >> 6] ^= (<uint64_t>1) << (v & 63)
        cx.cur[cur_len] = v
        for i in range(cx.nw):
            nxt[i] = cand[i] & cx.adj[v * cx.nw + i]
        r = _mc_expand(cx, level + 1, cur_len + 1)
        if r:
            return r
    return 0


def max_clique(n, adj, node_budget=0):
    if n == 0:
        return (0, [])
    cdef int nw = (n + 63) >> 6
    cdef uint64_t* a = _load_masks(adj, n, nw)
    cdef list seed = sorted(_greedy_clique_c(n, a, nw))
    cdef MCtx cx
    cx.n = n
    cx.nw = nw
    cx.adj = a
    cx.nodes = 0
    cx.budget = node_budget
    cx.stack = <uint64_t*> calloc(<size_t>(n + 2) * nw, sizeof(uint64_t))
    cx.cur = <int*> calloc(n, sizeof(int))
    cx.best = <int*> calloc(n, sizeof(int))
    if cx.stack == NULL or cx.cur == NULL or cx.best == NULL:
        free(a); free(cx.stack); free(cx.cur); free(cx.best)
        raise MemoryError()
    cdef int i
    cx.best_len = len(seed)
    for i in range(len(seed)):
        cx.best[i] = seed[i]
    for i in range(n):
        cx.stack[i >> 6] |= (<uint64_t>1) << (i & 63)
    cdef int status = _mc_expand(&cx, 0, 0)
    result = sorted([cx.best[i] for i in range(cx.best_len)])
    free(a); free(cx.stack); free(cx.cur); free(cx.best)
    return (2 if status == 2 else 0, result)


# ------------------------------------------------------------- embeddings

cdef struct ECtx:
    int m
    int nw
    uint64_t* host
    uint64_t* cands
    uint64_t* pool_stack
    uint64_t* used
    int* parents
    int* assign
    int* check_off    # m+1 offsets into check_s / check_w
    int* check_s
    int* check_w
    long long nodes
    long long budget
    long long total
    bint count_all


cdef int _emb_rec(ECtx* cx, int t):
    if t == cx.m:
        cx.total += 1
        return 0 if cx.count_all else 3   # 3 = witness complete
    cdef uint64_t* pool = cx.pool_stack + t * cx.nw
    cdef int i, h, s, w, r, p
    cdef uint64_t word
    cdef uint64_t* ham
    p = cx.parents[t]
    for i in range(cx.nw):
        pool[i] = cx.cands[t * cx.nw + i] & ~cx.used[i]
        if p >= 0:
            pool[i] &= cx.host[cx.assign[p] * cx.nw + i]
    for w in range(cx.nw):
        word = pool[w]
        while word:
            h = w * 64 + __builtin_ctzll(word)
            word &= word - 1
            cx.nodes += 1
            if cx.budget and cx.nodes > cx.budget:
                return 2
            ham = cx.host + h * cx.nw
            r = 1
            for i in range(cx.check_off[t], cx.check_off[t + 1]):
                s = cx.assign[cx.check_s[i]]
                if ((ham[s >> 6] >> (s & 63)) & 1) != <uint64_t>cx.check_w[i]:
                    r = 0
                    break
            if r == 0:
                continue
            cx.assign[t] = h
            cx.used[h >> 6] |= (<uint64_t>1) << (h & 63)
            r = _emb_rec(cx, t + 1)
            cx.used[h >> 6] ^= (<uint64_t>1) << (h & 63)
            if r == 2 or r == 3:
                return r
    return 1 if not cx.count_all else 0


cdef ECtx* _emb_setup(object host_adj, object pat_adj_o, object parents, object cands,
                      long long node_budget, bint count_all) except NULL:
    cdef int m = len(parents)
    cdef int hn = len(host_adj)
    cdef int nw = ((hn if hn > 0 else 1) + 63) >> 6
    cdef ECtx* cx = <ECtx*> calloc(1, sizeof(ECtx))
    if cx == NULL:
        raise MemoryError()
    cx.m = m
    cx.nw = nw
    cx.nodes = 0
    cx.budget = node_budget
    cx.total = 0
    cx.count_all = count_all
    cx.host = _load_masks(host_adj, hn, nw)
    cx.cands = _load_masks(cands, m, nw)
    cx.pool_stack = <uint64_t*> calloc(<size_t>(m + 1) * nw, sizeof(uint64_t))
    cx.used = <uint64_t*> calloc(nw, sizeof(uint64_t))
    cx.parents = <int*> calloc(m + 1, sizeof(int))
    cx.assign = <int*> calloc(m + 1, sizeof(int))
    cx.check_off = <int*> calloc(m + 1, sizeof(int))
    cdef int t, s, total_checks = 0
    for t in range(m):
        cx.parents[t] = parents[t]
        total_checks += t
    cx.check_s = <int*> calloc(total_checks if total_checks else 1, sizeof(int))
    cx.check_w = <int*> calloc(total_checks if total_checks else 1, sizeof(int))
    cdef int pos = 0
    cdef object row
    for t in range(m):
        cx.check_off[t] = pos
        row = pat_adj_o[t]
        for s in range(t):
            cx.check_s[pos] = s
            cx.check_w[pos] = (row >> s) & 1
            pos += 1
    cx.check_off[m] = pos
    return cx


cdef void _emb_free(ECtx* cx):
    free(cx.host); free(cx.cands); free(cx.pool_stack); free(cx.used)
    free(cx.parents); free(cx.assign); free(cx.check_off)
    free(cx.check_s); free(cx.check_w)
    free(cx)


def find_embedding(host_adj, pat_adj_o, parents, cands, node_budget=0):
    cdef ECtx* cx = _emb_setup(host_adj, pat_adj_o, parents, cands, node_budget, False)
    cdef int status
    try:
        status = _emb_rec(cx, 0)
        if status == 3:
            return (0, [cx.assign[i] for i in range(cx.m)])
        if status == 2:
            return (2, None)
        return (1, None)
    finally:
        _emb_free(cx)


def count_embeddings(host_adj, pat_adj_o, parents, cands, node_budget=0):
    cdef ECtx* cx = _emb_setup(host_adj, pat_adj_o, parents, cands, node_budget, True)
    cdef int status
    try:
        status = _emb_rec(cx, 0)
        if status == 2:
            return (2, None)
        return (0, cx.total)
    finally:
        _emb_free(cx)
