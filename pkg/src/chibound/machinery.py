"""Bounded searchers for the certificate types.

Every searcher is exhaustive at desk scale and deterministic: iteration is
ascending by vertex id, components are ranked by exact chromatic number
with ties to the smallest member, and each positive result is re-checked
by its validator before being returned.
"""

from .certificates import (
    Equipment,
    GyarfasResult,
    Spire,
    XSplit,
    validate_equipment,
    validate_gyarfas,
    validate_spire,
    validate_x_split,
)
from .coloring import chi_local, chromatic_number
from .embed import find_induced_embedding
from .errors import SearchBudgetExceeded
from .graphs import (
    bits,
    check_vertex_set,
    components_within,
    induced_subgraph,
    is_connected_set,
    level_decomposition,
    set_to_mask,
)
from .trees import path_tree


def _chi_of(g, s, node_budget=None):
    sub, _ = induced_subgraph(g, s)
    chi, _ = chromatic_number(sub, node_budget)
    return chi


def _best_component(g, region, node_budget=None):
    """Component of the region with the largest chromatic number; ties go
    to the component with the smallest member. None when region is empty."""
    best, best_chi = None, -1
    for comp in components_within(g, region):
        chi = _chi_of(g, comp, node_budget)
        if chi > best_chi:
            best, best_chi = comp, chi
    return best, best_chi


def find_x_split(g, x_ground, min_chi, node_budget=None):
    """First split with chromatic number above min_chi, scanning x then y
    ascending and candidate components by smallest member. Z is always a
    full component, which is maximal and loses no chromatic number.
    Absence means no split above the bound exists. A budget exhaustion
    inside the chromatic subcalls propagates as indeterminate."""
    x_ground = check_vertex_set(g, x_ground)
    xmask = set_to_mask(x_ground)
    everything = frozenset(range(g.n))
    for x in sorted(x_ground):
        for y in sorted(bits(g.adjacency_mask(x) & ~xmask)):
            region = everything - x_ground - {y} - set(bits(g.adjacency_mask(y)))
            for comp in components_within(g, region):
                if not g.adjacency_mask(x) & set_to_mask(comp):
                    continue
                if _chi_of(g, comp, node_budget) > min_chi:
                    cand = XSplit(x=x, y=y, z_set=comp)
                    ok, clause = validate_x_split(g, x_ground, cand)
                    if not ok:
                        raise AssertionError(f"searcher produced invalid split: {clause}")
                    return cand
    return None


def _gyarfas_core(g, c_set, x0, k):
    """Walk k steps: drop the endpoint's neighborhood, descend into the
    best component, step to the lowest neighbor touching it. Returns
    (path, residue) or None when some step has nowhere to go."""
    working = frozenset(c_set)
    path = [x0]
    for _ in range(k):
        last = path[-1]
        nbrs = working & set(bits(g.adjacency_mask(last)))
        if not nbrs:
            return None
        rest = working - nbrs
        comp, _ = _best_component(g, rest)
        if comp is None:
            return None
        cmask = set_to_mask(comp)
        steps = [v for v in sorted(nbrs) if g.adjacency_mask(v) & cmask]
        if not steps:
            return None
        path.append(steps[0])
        working = comp
    return tuple(path), working


def gyarfas_path(g, c_set, x0, k, checked=True):
    """Induced path of length k from x0 into the set, leaving a connected
    residue adjacent only to the far end.

    In checked mode the chromatic precondition is verified exactly before
    the walk. Unchecked mode trusts the caller; the walk can then fail,
    which raises RuntimeError.
    """
    c_set = check_vertex_set(g, c_set)
    g._check(x0)
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if x0 in c_set:
        raise ValueError("the start vertex must lie outside the set")
    if not c_set:
        raise ValueError("the set must be nonempty")
    if not is_connected_set(g, c_set):
        raise ValueError("the set must induce a connected subgraph")
    if not g.adjacency_mask(x0) & set_to_mask(c_set):
        raise ValueError("the start vertex needs a neighbor in the set")
    if checked:
        if _chi_of(g, c_set) <= k * chi_local(g, 1):
            raise ValueError("chromatic precondition fails: chi(C) must exceed k * chi_1")
    got = _gyarfas_core(g, c_set, x0, k)
    if got is None:
        raise RuntimeError("walk ran out of room; the chromatic precondition was not met")
    path, residue = got
    cert = GyarfasResult(path=path, residue=residue)
    ok, clause = validate_gyarfas(g, c_set, cert)
    if not ok:
        raise AssertionError(f"walk produced an invalid result: {clause}")
    return cert


def _lex_independent_subset(g, candidates, d):
    """Lexicographically first pairwise-nonadjacent d-subset of the sorted
    candidate list, by backtracking."""
    cands = sorted(candidates)
    chosen = []

    def rec(start):
        if len(chosen) == d:
            return True
        for i in range(start, len(cands)):
            v = cands[i]
            if all(not g.has_edge(v, u) for u in chosen):
                chosen.append(v)
                if rec(i + 1):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if rec(0) else None


def _induced_paths_from(g, start, allowed_mask, length, budget_box=None):
    """Yield induced paths (as tuples) of exactly the given length starting
    at start, every later vertex drawn from allowed_mask, in lexicographic
    order."""
    path = [start]

    def extend():
        if len(path) == length + 1:
            yield tuple(path)
            return
        last = path[-1]
        for w in sorted(bits(g.adjacency_mask(last) & allowed_mask)):
            if w in path:
                continue
            if any(g.has_edge(w, p) for p in path[:-1]):
                continue
            if budget_box is not None:
                budget_box[0] += 1
                if budget_box[1] and budget_box[0] > budget_box[1]:
                    raise SearchBudgetExceeded("equipment path enumeration")
            path.append(w)
            yield from extend()
            path.pop()

    yield from extend()


def d_equipment(g, center, y_ground, d, node_budget=None):
    """Equipment of the center within the ground set, or None.

    The independent neighbor set does not depend on the path, so it is
    found once; then paths are enumerated lexicographically until one
    admits a witness neighbor."""
    y = check_vertex_set(g, y_ground)
    g._check(center)
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if center in y:
        raise ValueError("center must lie outside the ground set")
    ymask = set_to_mask(y)
    nbrs = sorted(bits(g.adjacency_mask(center) & ymask))
    indep = _lex_independent_subset(g, nbrs, d)
    if indep is None:
        return None
    box = [0, node_budget or 0]
    for path in _induced_paths_from(g, center, ymask, d, box):
        interior_mask = set_to_mask(set(path) - {center})
        for w in nbrs:
            if w in path:
                continue
            if g.adjacency_mask(w) & interior_mask:
                continue
            cert = Equipment(
                center=center,
                independent_neighbors=frozenset(indep),
                path=path,
                witness=w,
            )
            ok, clause = validate_equipment(g, y, cert)
            if not ok:
                raise AssertionError(f"searcher produced invalid equipment: {clause}")
            return cert
    return None


def properly_d_equipped(g, center, y_ground, d, node_budget=None):
    """Strengthened equipment: the d pairwise-nonadjacent neighbors must
    avoid the path and have no neighbors on it beyond the center. The
    neighbor set now depends on the path, so both are searched together."""
    y = check_vertex_set(g, y_ground)
    g._check(center)
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if center in y:
        raise ValueError("center must lie outside the ground set")
    ymask = set_to_mask(y)
    nbrs = sorted(bits(g.adjacency_mask(center) & ymask))
    box = [0, node_budget or 0]
    for path in _induced_paths_from(g, center, ymask, d, box):
        on_path = set(path)
        interior_mask = set_to_mask(on_path - {center})
        allowed = [v for v in nbrs if v not in on_path and not g.adjacency_mask(v) & interior_mask]
        indep = _lex_independent_subset(g, allowed, d)
        if indep is None:
            continue
        cert = Equipment(
            center=center,
            independent_neighbors=frozenset(indep),
            path=path,
            witness=None,
            proper=True,
        )
        ok, clause = validate_equipment(g, y, cert)
        if not ok:
            raise AssertionError(f"searcher produced invalid proper equipment: {clause}")
        return cert
    return None


def find_spire(g, d, min_chi, node_budget=None):
    """Spire of height d dominating a set with chromatic number above
    min_chi, or None.

    Construction: from a start vertex, walk a d-step path into the best
    component, level-decompose what remains from the far end, and cut the
    levels at the best deep level. Start vertices are tried by descending
    degree, then ascending id."""
    if d < 1:
        raise ValueError(f"height must be positive, got {d}")
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    for x0 in order:
        region = frozenset(range(g.n)) - {x0}
        xmask = g.adjacency_mask(x0)
        comps = [c for c in components_within(g, region) if xmask & set_to_mask(c)]
        if not comps:
            continue
        best, best_chi = None, -1
        for comp in comps:
            chi = _chi_of(g, comp, node_budget)
            if chi > best_chi:
                best, best_chi = comp, chi
        got = _gyarfas_core(g, best, x0, d)
        if got is None:
            continue
        path, residue = got
        tip = path[-1]
        sub, old_ids = induced_subgraph(g, residue | {tip})
        new_of = {v: i for i, v in enumerate(old_ids)}
        levels = level_decomposition(sub, new_of[tip]).levels
        if len(levels) < 3:
            continue
        best_i, best_level_chi = None, -1
        for i in range(2, len(levels)):
            chi = _chi_of(sub, levels[i], node_budget)
            if chi > best_level_chi:
                best_i, best_level_chi = i, chi
        if best_level_chi <= min_chi:
            continue

        def to_old(level):
            return frozenset(old_ids[v] for v in level)

        a_set = frozenset().union(*(to_old(levels[j]) for j in range(best_i - 1)))
        b_set = to_old(levels[best_i - 1])
        dominated = to_old(levels[best_i])
        spire = Spire(path=path, a_set=a_set, b_set=b_set)
        ok, clause = validate_spire(g, spire, dominated)
        if not ok:
            raise AssertionError(f"construction produced an invalid spire: {clause}")
        return spire, dominated
    return None


def induced_path_centered(g, v, r, node_budget=None):
    """Induced path on 2r+1 vertices with v exactly in the middle, or None.
    Exhaustive via anchored embedding search."""
    if r < 1:
        raise ValueError(f"radius must be positive, got {r}")
    g._check(v)
    pattern = path_tree(2 * r).graph
    emb = find_induced_embedding(g, pattern, anchor=(r, v), node_budget=node_budget)
    if emb is None:
        return None
    return tuple(emb.mapping)
