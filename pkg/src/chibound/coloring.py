"""Exact chromatic and clique invariants.

All answers are exact; budgets are opt-in node budgets (deterministic) and
default to unbounded. Searches break ties by lowest vertex id, so repeated
runs and both kernel backends return identical witnesses.
"""

from dataclasses import dataclass

from . import _kernels
from .errors import ColoringBudgetExceeded, SearchBudgetExceeded
from .graphs import bits, induced_subgraph, neighborhood


def _greedy_upper(g):
    """Sequential greedy coloring count, a cheap honest upper bound."""
    colors = {}
    for v in range(g.n):
        used = {colors[u] for u in bits(g.adjacency_mask(v)) if u in colors}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    return max(colors.values(), default=0)


@dataclass(frozen=True)
class Coloring:
    """Proper coloring witness: colors[v] in 1..color_count."""

    colors: tuple
    color_count: int

    def color_of(self, v):
        return self.colors[v]

    def to_json_dict(self):
        return {str(v): c for v, c in enumerate(self.colors)}

    def check(self, g):
        if len(self.colors) != g.n:
            return False
        if any(not 1 <= c <= self.color_count for c in self.colors):
            return False
        return all(self.colors[u] != self.colors[v] for u, v in g.edges())


def is_k_colorable(g, k, node_budget=None):
    """A proper coloring with at most k colors, or None when none exists."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return _k_colorable(g, k, node_budget)


def _k_colorable(g, k, node_budget=None):
    status, colors = _kernels.k_color(g.n, list(g.adjacency_masks()), k, node_budget or 0)
    if status == 2:
        raise ColoringBudgetExceeded(lower=0, upper=_greedy_upper(g))
    if status == 1:
        return None
    used = max(colors) if colors else 0
    return Coloring(colors=tuple(colors), color_count=max(used, 0))


def chromatic_number(g, node_budget=None):
    """Exact chromatic number with an optimal witness.

    Returns (chi, Coloring or None). The null graph has chi 0 and no
    witness. On budget exhaustion raises ColoringBudgetExceeded with the
    best bounds proved so far.
    """
    if g.n == 0:
        return 0, None
    adj = list(g.adjacency_masks())
    lower = len(_kernels.greedy_clique(g.n, adj))
    for k in range(max(lower, 1), g.n + 1):
        try:
            witness = _k_colorable(g, k, node_budget)
        except ColoringBudgetExceeded:
            raise ColoringBudgetExceeded(lower=k, upper=_greedy_upper(g)) from None
        if witness is not None:
            return k, witness
    raise AssertionError("unreachable: every graph is n-colorable")


def clique_number(g, node_budget=None):
    """Exact clique number with a witness clique (empty for the null graph)."""
    status, clique = _kernels.max_clique(g.n, list(g.adjacency_masks()), node_budget or 0)
    if status == 2:
        raise SearchBudgetExceeded(f"maximum clique (best found {len(clique)})")
    return len(clique), tuple(clique)


def chi_local(g, k, node_budget=None):
    """Largest chromatic number of any radius-k closed ball; 0 for the
    null graph."""
    if k < 1:
        raise ValueError(f"radius must be positive, got {k}")
    best = 0
    for v in range(g.n):
        ball = neighborhood(g, v, k, mode="ball")
        sub, _ = induced_subgraph(g, ball)
        chi, _ = chromatic_number(sub, node_budget)
        if chi > best:
            best = chi
    return best


def minimal_subset_with_chi(g, s, t, node_budget=None):
    """Vertex-minimal s' within s keeping chi(s') >= t.

    One ascending deletion pass: dropping a vertex never raises chi, so
    every survivor is necessary at exit. Requires chi(s) >= t.
    """
    if t < 1:
        raise ValueError(f"threshold must be positive, got {t}")
    current = sorted(set(s))
    if _chi_of_subset(g, current, node_budget) < t:
        raise ValueError(f"chi of the given set is below {t}")
    for v in list(current):
        trial = [u for u in current if u != v]
        if _chi_of_subset(g, trial, node_budget) >= t:
            current = trial
    return frozenset(current)


def _chi_of_subset(g, s, node_budget=None):
    sub, _ = induced_subgraph(g, s)
    chi, _ = chromatic_number(sub, node_budget)
    return chi


def is_vertex_critical(g, node_budget=None):
    """True iff deleting any single vertex lowers the chromatic number."""
    chi, _ = chromatic_number(g, node_budget)
    if chi == 0:
        return True
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        if _chi_of_subset(g, rest, node_budget) >= chi:
            return False
    return True
