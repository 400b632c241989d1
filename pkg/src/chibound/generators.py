"""Host graph generators: classics, bounded-clique high-chromatic
families, and seeded random graphs.

Randomness is counter-based (SHA-256 over seed and edge slot), so a seed
determines the graph bit for bit on every platform.
"""

import hashlib
from fractions import Fraction
from itertools import combinations

from .graphs import Graph


def empty_graph(n):
    return Graph(n)


def complete_graph(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n):
    """Path on n vertices."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise ValueError(f"cycles need at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def mycielski(g):
    """One Mycielski step: vertices 0..n-1 keep their edges, each shadow
    n+i copies the neighborhood of i, and an apex 2n joins all shadows.
    Raises the chromatic number by exactly one and creates no triangle."""
    n = g.n
    edges = list(g.edges())
    for u, v in g.edges():
        edges.append((u, n + v))
        edges.append((v, n + u))
    apex = 2 * n
    edges.extend((n + i, apex) for i in range(n))
    return Graph(2 * n + 1, edges)


def mycielski_tower(t):
    """t Mycielski steps on a single edge. Chromatic number t + 2."""
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    g = complete_graph(2)
    for _ in range(t):
        g = mycielski(g)
    return g


def grotzsch():
    """The 11-vertex triangle-free vertex-critical graph with chromatic
    number 4 (one Mycielski step on the 5-cycle)."""
    return mycielski(cycle_graph(5))


def kneser(n, k):
    """Vertices are the k-subsets of an n-set in lexicographic order,
    adjacent when disjoint. kneser(5, 2) is the Petersen graph."""
    if k < 1 or n < 2 * k:
        raise ValueError(f"kneser needs n >= 2k >= 2, got n={n}, k={k}")
    subsets = list(combinations(range(n), k))
    index = {s: i for i, s in enumerate(subsets)}
    edges = []
    for i, a in enumerate(subsets):
        sa = set(a)
        for b in subsets[i + 1:]:
            if not sa & set(b):
                edges.append((i, index[b]))
    return Graph(len(subsets), edges)


def petersen():
    return kneser(5, 2)


def shift_graph(n):
    """Vertices are pairs (i, j) with 1 <= i < j <= n in lexicographic
    order; (i, j) is adjacent to (j, l). Chromatic number grows like the
    base-2 logarithm of n while every clique has size at most 2."""
    if n < 2:
        raise ValueError(f"shift graphs need n >= 2, got {n}")
    pairs = list(combinations(range(1, n + 1), 2))
    index = {p: i for i, p in enumerate(pairs)}
    edges = []
    for (i, j) in pairs:
        for l in range(j + 1, n + 1):
            edges.append((index[(i, j)], index[(j, l)]))
    return Graph(len(pairs), edges)


def _edge_hash(seed, u, v):
    digest = hashlib.sha256(f"{seed}:{u}:{v}".encode()).digest()
    return int.from_bytes(digest, "big")


def random_graph(n, p, seed):
    """Seeded Erdos-Renyi graph.

    p may be an int, a Fraction, or a decimal string like "0.3"; these are
    handled exactly. A float is accepted and used at its exact binary
    value. Each potential edge draws 256 hash bits, so the construction is
    reproducible across platforms and processes.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if not (0 <= seed < 2 ** 64):
        raise ValueError(f"seed must fit in 64 bits, got {seed}")
    frac = Fraction(p)
    if not (0 <= frac <= 1):
        raise ValueError(f"p must lie in [0, 1], got {p}")
    threshold_num = frac.numerator * (1 << 256)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if _edge_hash(seed, u, v) * frac.denominator < threshold_num:
                edges.append((u, v))
    return Graph(n, edges)


GENERATORS = {
    "empty": (empty_graph, ("n",)),
    "complete": (complete_graph, ("n",)),
    "path": (path_graph, ("n",)),
    "cycle": (cycle_graph, ("n",)),
    "star": (star_graph, ("leaves",)),
    "kneser": (kneser, ("n", "k")),
    "petersen": (petersen, ()),
    "shift": (shift_graph, ("n",)),
    "grotzsch": (grotzsch, ()),
    "mycielski_tower": (mycielski_tower, ("t",)),
    "random": (random_graph, ("n", "p", "seed")),
}


def make_graph(name, params):
    """Instantiate a named generator from a parameter mapping."""
    if name not in GENERATORS:
        raise ValueError(f"unknown generator {name!r}; known: {', '.join(sorted(GENERATORS))}")
    fn, wanted = GENERATORS[name]
    missing = [w for w in wanted if w not in params]
    if missing:
        raise ValueError(f"generator {name} needs {wanted}, missing {missing}")
    return fn(**{w: params[w] for w in wanted})
