"""Constructors for the tree families used as search patterns.

Vertex numbering follows construction order (centers first, then legs and
path vertices in order) so fixtures and anchors are reproducible.
"""

from dataclasses import dataclass

from .graphs import Graph, components


@dataclass(frozen=True)
class RootedTree:
    graph: Graph
    root: int

    def __post_init__(self):
        g = self.graph
        if not (0 <= self.root < g.n):
            raise ValueError(f"root {self.root} out of range")
        if g.edge_count != g.n - 1 or len(components(g)) != 1:
            raise ValueError("not a tree: need connected with n-1 edges")


def _path_edges(ids):
    return list(zip(ids, ids[1:]))


def superstar(d):
    """Star with d legs, every leg a path of length d. Rooted at the center.
    1 + d*d vertices."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    edges = []
    nxt = 1
    for _ in range(d):
        leg = [0] + list(range(nxt, nxt + d))
        edges.extend(_path_edges(leg))
        nxt += d
    return RootedTree(Graph(1 + d * d, edges), root=0)


def broom(k, d):
    """Path of length k with d extra leaves on the far end, rooted at the
    near end. k+1+d vertices."""
    if k < 1 or d < 1:
        raise ValueError(f"k and d must be positive, got k={k}, d={d}")
    edges = _path_edges(list(range(k + 1)))
    edges.extend((k, k + 1 + i) for i in range(d))
    return RootedTree(Graph(k + 1 + d, edges), root=0)


def bristle(k, d):
    """Path of length k+d with one extra leaf at position k, rooted at
    position 0. k+d+2 vertices."""
    if k < 1 or d < 1:
        raise ValueError(f"k and d must be positive, got k={k}, d={d}")
    edges = _path_edges(list(range(k + d + 1)))
    edges.append((k, k + d + 1))
    return RootedTree(Graph(k + d + 2, edges), root=0)


def binary_star(k, d):
    """A d-superstar and a d-star with their centers joined by a path of
    length k. Unrooted; d*d + d + k + 1 vertices.

    Layout: superstar occupies 0..d*d (center 0), star center is d*d+1
    with leaves d*d+2..d*d+d+1, then the k-1 interior path vertices.
    """
    if k < 1 or d < 1:
        raise ValueError(f"k and d must be positive, got k={k}, d={d}")
    ss = superstar(d).graph
    edges = ss.edges()
    star_center = ss.n
    leaves = list(range(star_center + 1, star_center + 1 + d))
    edges.extend((star_center, leaf) for leaf in leaves)
    interior = list(range(star_center + 1 + d, star_center + 1 + d + (k - 1)))
    edges.extend(_path_edges([0] + interior + [star_center]))
    return Graph(d * d + d + k + 1, edges)


def bristled_star(k, d):
    """A d-superstar and a path of length d+1, with the superstar center
    joined to the second path vertex by a path of length k. Unrooted;
    d*d + d + k + 2 vertices.

    Layout: superstar occupies 0..d*d (center 0), the long path is
    d*d+1..d*d+d+2 in order, then the k-1 interior join vertices.
    """
    if k < 1 or d < 1:
        raise ValueError(f"k and d must be positive, got k={k}, d={d}")
    ss = superstar(d).graph
    edges = ss.edges()
    tail = list(range(ss.n, ss.n + d + 2))
    edges.extend(_path_edges(tail))
    second = tail[1]
    interior = list(range(ss.n + d + 2, ss.n + d + 2 + (k - 1)))
    edges.extend(_path_edges([0] + interior + [second]))
    return Graph(d * d + d + k + 2, edges)


def two_legged_caterpillar(path_len, p1, p2):
    """Path on path_len+1 vertices plus two extra leaves attached at
    positions p1 and p2 (equal positions allowed)."""
    if path_len < 1:
        raise ValueError(f"path_len must be positive, got {path_len}")
    if not (0 <= p1 <= path_len and 0 <= p2 <= path_len):
        raise ValueError(f"leg positions {p1},{p2} out of range 0..{path_len}")
    edges = _path_edges(list(range(path_len + 1)))
    edges.append((p1, path_len + 1))
    edges.append((p2, path_len + 2))
    return Graph(path_len + 3, edges)


def double_broom(a, k, b):
    """Two stars with a and b leaves, centers joined by a path of length k.
    a+b+k+1 vertices."""
    if a < 1 or b < 1 or k < 1:
        raise ValueError(f"arguments must be positive, got a={a}, k={k}, b={b}")
    c1 = 0
    leaves1 = list(range(1, 1 + a))
    c2 = 1 + a
    leaves2 = list(range(c2 + 1, c2 + 1 + b))
    edges = [(c1, leaf) for leaf in leaves1]
    edges += [(c2, leaf) for leaf in leaves2]
    interior = list(range(c2 + 1 + b, c2 + 1 + b + (k - 1)))
    edges.extend(_path_edges([c1] + interior + [c2]))
    return Graph(a + b + k + 1, edges)


def rooted_sum(trees):
    """Disjoint union of rooted trees with all roots identified. The merged
    root becomes vertex 0."""
    trees = list(trees)
    if not trees:
        raise ValueError("rooted_sum needs at least one tree")
    edges = []
    offset = 1
    for t in trees:
        g, r = t.graph, t.root
        relabel = {}
        for v in range(g.n):
            if v == r:
                relabel[v] = 0
            else:
                relabel[v] = offset
                offset += 1
        edges.extend((relabel[u], relabel[v]) for u, v in g.edges())
    return RootedTree(Graph(offset, edges), root=0)


def path_tree(length):
    """Plain path of the given length, rooted at one end."""
    if length < 0:
        raise ValueError(f"length must be non-negative, got {length}")
    return RootedTree(Graph(length + 1, _path_edges(list(range(length + 1)))), root=0)
