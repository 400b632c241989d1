"""Certificate types for structured witnesses, their validators, and the
JSON wire format.

Every validator re-checks its object from scratch against the host graph
and reports the first failed clause by definitional order, which keeps
test failures actionable. Searchers elsewhere must only emit certificates
that pass these checks (the closed-loop property).

JSON objects are tagged with "type" in {x_split, equipment, gyarfas,
spire, cathedral, band} plus "starry" for the two-pattern certificate.
Context needed for standalone validation (ground sets, the dominated set)
travels inside the object.
"""

from dataclasses import dataclass

from .coloring import chi_local, chromatic_number
from .embed import Embedding, StarryCertificate, verify_embedding
from .graphs import bits, check_vertex_set, induced_subgraph, is_connected_set, set_to_mask
from .trees import binary_star, bristled_star, superstar


@dataclass(frozen=True)
class XSplit:
    x: int
    y: int
    z_set: frozenset


@dataclass(frozen=True)
class Equipment:
    """Parts of the equipment of a vertex: d pairwise nonadjacent neighbors,
    an induced path of length d out of the center, and (in the plain form)
    a witness neighbor touching the path only at the center."""

    center: int
    independent_neighbors: frozenset
    path: tuple
    witness: int | None = None
    proper: bool = False


@dataclass(frozen=True)
class GyarfasResult:
    path: tuple
    residue: frozenset


@dataclass(frozen=True)
class Spire:
    path: tuple
    a_set: frozenset
    b_set: frozenset

    @property
    def height(self):
        return len(self.path) - 1

    def vertex_set(self):
        return self.a_set | self.b_set | set(self.path)

    @property
    def anchor(self):
        """The path end inside A."""
        return self.path[0] if self.path[0] in self.a_set else self.path[-1]


@dataclass(frozen=True)
class Cathedral:
    spires: tuple

    def __len__(self):
        return len(self.spires)


@dataclass(frozen=True)
class Band:
    d: int
    embedding: Embedding
    center: int
    b_set: frozenset

    def superstar_vertices(self):
        return frozenset(self.embedding.mapping)


def _is_induced_path(g, seq):
    if len(seq) != len(set(seq)):
        return False
    for i, u in enumerate(seq):
        for j in range(i + 1, len(seq)):
            if g.has_edge(u, seq[j]) != (j == i + 1):
                return False
    return True


def validate_x_split(g, x_ground, cand):
    """All four definitional requirements of a split relative to x_ground.
    Returns (ok, first_failed_clause)."""
    x_ground = check_vertex_set(g, x_ground)
    z = check_vertex_set(g, cand.z_set)
    g._check(cand.x)
    g._check(cand.y)
    zmask = set_to_mask(z)
    if cand.x not in x_ground:
        return False, "x_in_x_ground"
    if cand.y in x_ground:
        return False, "y_outside_x_ground"
    if z & (x_ground | {cand.y}):
        return False, "z_avoids_x_ground_and_y"
    if not g.has_edge(cand.x, cand.y):
        return False, "x_adjacent_y"
    if not g.adjacency_mask(cand.x) & zmask:
        return False, "x_has_neighbor_in_z"
    if g.adjacency_mask(cand.y) & zmask:
        return False, "y_no_neighbors_in_z"
    if not is_connected_set(g, z):
        return False, "z_connected"
    return True, None


def validate_equipment(g, y_ground, cert):
    """Equipment clauses relative to the ground set. Handles both the plain
    form (witness required) and the proper form (neighbors must avoid the
    path entirely)."""
    y = check_vertex_set(g, y_ground)
    g._check(cert.center)
    nbrs = check_vertex_set(g, cert.independent_neighbors)
    path = tuple(cert.path)
    d = len(nbrs)
    if cert.center in y:
        return False, "center_outside_ground"
    if len(path) != d + 1:
        return False, "path_length_matches_d"
    if not nbrs <= y:
        return False, "neighbors_in_ground"
    if any(not g.has_edge(cert.center, v) for v in nbrs):
        return False, "neighbors_adjacent_center"
    ns = sorted(nbrs)
    for i, u in enumerate(ns):
        for v in ns[i + 1:]:
            if g.has_edge(u, v):
                return False, "neighbors_pairwise_nonadjacent"
    if not path or path[0] != cert.center:
        return False, "path_starts_at_center"
    if not set(path[1:]) <= y:
        return False, "path_vertices_in_ground"
    if not _is_induced_path(g, path):
        return False, "path_induced"
    interior = set(path) - {cert.center}
    imask = set_to_mask(interior)
    if cert.proper:
        if nbrs & set(path):
            return False, "neighbors_off_path"
        if any(g.adjacency_mask(v) & imask for v in nbrs):
            return False, "neighbors_detached_from_path"
        return True, None
    w = cert.witness
    if w is None or not 0 <= w < g.n or w not in y:
        return False, "witness_in_ground"
    if w in path:
        return False, "witness_off_path"
    if not g.has_edge(cert.center, w):
        return False, "witness_adjacent_center"
    if g.adjacency_mask(w) & imask:
        return False, "witness_no_other_path_neighbors"
    return True, None


def validate_gyarfas(g, c_set, cert):
    """The four conclusion clauses plus the chromatic lower bound. The path
    length determines k."""
    c = check_vertex_set(g, c_set)
    path = tuple(cert.path)
    residue = check_vertex_set(g, cert.residue)
    if not path:
        return False, "path_nonempty"
    k = len(path) - 1
    if path[0] in c:
        return False, "start_outside_c"
    if not set(path[1:]) <= c:
        return False, "path_inside_c"
    if not _is_induced_path(g, path):
        return False, "path_induced"
    if not residue <= c:
        return False, "residue_inside_c"
    if residue & set(path):
        return False, "residue_avoids_path"
    if not residue or not is_connected_set(g, residue):
        return False, "residue_connected"
    rmask = set_to_mask(residue)
    if not g.adjacency_mask(path[-1]) & rmask:
        return False, "endpoint_adjacent_residue"
    if any(g.adjacency_mask(v) & rmask for v in path[:-1]):
        return False, "earlier_path_detached"
    chi_c, _ = chromatic_number(induced_subgraph(g, c)[0])
    chi_res, _ = chromatic_number(induced_subgraph(g, residue)[0])
    if chi_res < chi_c - k * chi_local(g, 1):
        return False, "residue_chromatic_bound"
    return True, None


def validate_spire(g, spire, dominated=None):
    """The five spire clauses, plus the three domination clauses when a
    dominated set is supplied."""
    path = tuple(spire.path)
    a = check_vertex_set(g, spire.a_set)
    b = check_vertex_set(g, spire.b_set)
    if not path or not _is_induced_path(g, path):
        return False, "path_induced"
    if not a or not is_connected_set(g, a):
        return False, "a_connected"
    if a & b:
        return False, "a_b_disjoint"
    amask = set_to_mask(a)
    if any(not g.adjacency_mask(v) & amask for v in b):
        return False, "a_covers_b"
    if set(path) & b:
        return False, "path_avoids_b"
    ends_in_a = [v for v in (path[0], path[-1]) if v in a]
    if not ends_in_a or set(path) & a != {ends_in_a[0]}:
        return False, "path_meets_a_only_at_anchor"
    z = ends_in_a[0]
    ab_rest = set_to_mask((a | b) - {z})
    if any(g.adjacency_mask(v) & ab_rest for v in path if v != z):
        return False, "path_detached_from_a_b"
    if dominated is None:
        return True, None
    c = check_vertex_set(g, dominated)
    if c & spire.vertex_set():
        return False, "dominated_disjoint"
    cmask = set_to_mask(c)
    if any(g.adjacency_mask(v) & cmask for v in a | set(path)):
        return False, "no_edges_a_path_to_dominated"
    bmask = set_to_mask(b)
    if any(not g.adjacency_mask(v) & bmask for v in c):
        return False, "b_covers_dominated"
    return True, None


def validate_cathedral(g, cath, free=False, dominated=None):
    """Per-spire validity, pairwise disjointness, the cross-edge rule
    (free variant: only B-to-B allowed), and per-spire domination."""
    spires = tuple(cath.spires)
    if not spires:
        return False, "nonempty"
    for i, s in enumerate(spires):
        ok, clause = validate_spire(g, s, dominated)
        if not ok:
            return False, f"spire_{i}_{clause}"
    for i in range(len(spires)):
        for j in range(i + 1, len(spires)):
            vi, vj = spires[i].vertex_set(), spires[j].vertex_set()
            if vi & vj:
                return False, f"disjoint_{i}_{j}"
            allowed_j = spires[j].b_set if free else (spires[j].a_set | spires[j].b_set)
            for u in vi:
                for v in bits(g.adjacency_mask(u) & set_to_mask(vj)):
                    if u not in spires[i].b_set or v not in allowed_j:
                        return False, f"cross_edges_{i}_{j}"
    return True, None


def validate_band(g, band, dominated=None):
    """Band clauses: an induced superstar rooted at the center, B fully
    adjacent to the center and untouched by the rest of the star."""
    b = check_vertex_set(g, band.b_set)
    g._check(band.center)
    pattern = superstar(band.d).graph
    if not verify_embedding(g, pattern, band.embedding):
        return False, "superstar_embedding_valid"
    if band.embedding.mapping[0] != band.center:
        return False, "root_maps_to_center"
    hverts = band.superstar_vertices()
    if b & hverts:
        return False, "b_avoids_superstar"
    bmask = set_to_mask(b)
    if any(not g.has_edge(band.center, v) for v in b):
        return False, "center_adjacent_b"
    if any(g.adjacency_mask(v) & bmask for v in hverts - {band.center}):
        return False, "superstar_detached_from_b"
    if dominated is None:
        return True, None
    c = check_vertex_set(g, dominated)
    if c & hverts:
        return False, "dominated_avoids_superstar"
    if c & b:
        return False, "dominated_avoids_b"
    cmask = set_to_mask(c)
    if any(g.adjacency_mask(v) & cmask for v in hverts):
        return False, "no_edges_superstar_to_dominated"
    if any(not g.adjacency_mask(v) & bmask for v in c):
        return False, "b_covers_dominated"
    return True, None


def validate_starry(g, cert):
    if not verify_embedding(g, binary_star(cert.k, cert.d), cert.binary_embedding):
        return False, "binary_star_embedding"
    if not verify_embedding(g, bristled_star(cert.k, cert.d), cert.bristled_embedding):
        return False, "bristled_star_embedding"
    return True, None


# ------------------------------------------------------------ wire format

def certificate_to_json(cert, **context):
    """Serialize a certificate plus its validation context."""
    if isinstance(cert, XSplit):
        return {
            "type": "x_split",
            "x": cert.x,
            "y": cert.y,
            "z_set": sorted(cert.z_set),
            "x_ground": sorted(context["x_ground"]),
        }
    if isinstance(cert, Equipment):
        return {
            "type": "equipment",
            "center": cert.center,
            "independent_neighbors": sorted(cert.independent_neighbors),
            "path": list(cert.path),
            "witness": cert.witness,
            "proper": cert.proper,
            "ground": sorted(context["ground"]),
        }
    if isinstance(cert, GyarfasResult):
        return {
            "type": "gyarfas",
            "path": list(cert.path),
            "residue": sorted(cert.residue),
            "c_set": sorted(context["c_set"]),
        }
    if isinstance(cert, Spire):
        out = {
            "type": "spire",
            "path": list(cert.path),
            "a_set": sorted(cert.a_set),
            "b_set": sorted(cert.b_set),
        }
        if context.get("dominated") is not None:
            out["dominated"] = sorted(context["dominated"])
        return out
    if isinstance(cert, Cathedral):
        out = {
            "type": "cathedral",
            "spires": [
                {"path": list(s.path), "a_set": sorted(s.a_set), "b_set": sorted(s.b_set)}
                for s in cert.spires
            ],
            "free": bool(context.get("free", False)),
        }
        if context.get("dominated") is not None:
            out["dominated"] = sorted(context["dominated"])
        return out
    if isinstance(cert, Band):
        out = {
            "type": "band",
            "d": cert.d,
            "embedding": cert.embedding.to_json_list(),
            "center": cert.center,
            "b_set": sorted(cert.b_set),
        }
        if context.get("dominated") is not None:
            out["dominated"] = sorted(context["dominated"])
        return out
    if isinstance(cert, StarryCertificate):
        return {
            "type": "starry",
            "k": cert.k,
            "d": cert.d,
            "binary_embedding": cert.binary_embedding.to_json_list(),
            "bristled_embedding": cert.bristled_embedding.to_json_list(),
        }
    raise TypeError(f"not a certificate: {cert!r}")


def verify_certificate(g, obj):
    """Validate a JSON certificate object against its host graph.
    Returns (ok, first_failed_clause)."""
    kind = obj.get("type")
    if kind == "x_split":
        cert = XSplit(x=obj["x"], y=obj["y"], z_set=frozenset(obj["z_set"]))
        return validate_x_split(g, frozenset(obj["x_ground"]), cert)
    if kind == "equipment":
        cert = Equipment(
            center=obj["center"],
            independent_neighbors=frozenset(obj["independent_neighbors"]),
            path=tuple(obj["path"]),
            witness=obj.get("witness"),
            proper=bool(obj.get("proper", False)),
        )
        return validate_equipment(g, frozenset(obj["ground"]), cert)
    if kind == "gyarfas":
        cert = GyarfasResult(path=tuple(obj["path"]), residue=frozenset(obj["residue"]))
        return validate_gyarfas(g, frozenset(obj["c_set"]), cert)
    if kind == "spire":
        cert = Spire(
            path=tuple(obj["path"]),
            a_set=frozenset(obj["a_set"]),
            b_set=frozenset(obj["b_set"]),
        )
        dom = frozenset(obj["dominated"]) if obj.get("dominated") is not None else None
        return validate_spire(g, cert, dom)
    if kind == "cathedral":
        cert = Cathedral(
            spires=tuple(
                Spire(
                    path=tuple(s["path"]),
                    a_set=frozenset(s["a_set"]),
                    b_set=frozenset(s["b_set"]),
                )
                for s in obj["spires"]
            )
        )
        dom = frozenset(obj["dominated"]) if obj.get("dominated") is not None else None
        return validate_cathedral(g, cert, free=bool(obj.get("free", False)), dominated=dom)
    if kind == "band":
        cert = Band(
            d=obj["d"],
            embedding=Embedding.from_json_list(obj["embedding"]),
            center=obj["center"],
            b_set=frozenset(obj["b_set"]),
        )
        dom = frozenset(obj["dominated"]) if obj.get("dominated") is not None else None
        return validate_band(g, cert, dom)
    if kind == "starry":
        cert = StarryCertificate(
            k=obj["k"],
            d=obj["d"],
            binary_embedding=Embedding.from_json_list(obj["binary_embedding"]),
            bristled_embedding=Embedding.from_json_list(obj["bristled_embedding"]),
        )
        return validate_starry(g, cert)
    raise ValueError(f"unknown certificate type {kind!r}")
