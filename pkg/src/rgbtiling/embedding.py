"""Combinatorial embeddings of planar triangulations.

A graph is stored as a rotation system: for every vertex the cyclic,
counterclockwise order of its neighbours.  Faces are never stored; they are
recovered by face tracing.  A maximal planar graph (MPG) carries an empty
``outer_facets`` list and one of its triangles is read as the unbounded face;
a semi-MPG declares its non-triangle outer facets explicitly.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field

Edge = tuple[int, int]


class RGBTilingError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(RGBTilingError):
    """Malformed graph or tiling file."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column


class EmbeddingError(RGBTilingError):
    """Rotation system fails a structural invariant."""


class RegionError(RGBTilingError):
    """A topic-for-discussion region cannot be cut out cleanly."""


class SurgeryError(RGBTilingError):
    """Vertex removal / merge / edge insertion would break the embedding."""


def edge_key(u: int, v: int) -> Edge:
    """Canonical (min, max) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


def _canonical_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate a cyclic sequence so it starts at its minimum element."""
    i = cycle.index(min(cycle))
    return cycle[i:] + cycle[:i]


def _cycle_variants(cycle: tuple[int, ...]) -> set[tuple[int, ...]]:
    out = set()
    n = len(cycle)
    for seq in (cycle, cycle[::-1]):
        for i in range(n):
            out.add(seq[i:] + seq[:i])
    return out


@dataclass(frozen=True)
class Facet:
    """One face of the embedding: a triangle or a declared outer facet."""

    kind: str  # "triangle" | "outer"
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def edges(self) -> tuple[Edge, ...]:
        vs = self.vertices
        return tuple(edge_key(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


@dataclass(frozen=True)
class Diamond:
    """The two triangles sharing an interior edge, or one triangle at the rim.

    ``apexes`` holds the third vertices of the two triangles; for an edge
    along an outer facet the second apex is None and ``along_outer`` is set.
    """

    edge: Edge
    apexes: tuple[int, int | None]
    along_outer: bool = False

    @property
    def is_triangle(self) -> bool:
        return self.along_outer

    def quad(self) -> tuple[Edge, Edge, Edge, Edge]:
        """Boundary edges of the diamond in cyclic order u-x-v-y."""
        if self.along_outer:
            raise EmbeddingError(f"edge {self.edge} lies along an outer facet; no quad")
        u, v = self.edge
        x, y = self.apexes
        return (edge_key(u, x), edge_key(x, v), edge_key(v, y), edge_key(y, u))


@dataclass(frozen=True)
class Embedding:
    """Immutable rotation-system embedding.

    rotation[v] is the cyclic neighbour order of vertex v.  The instance is
    validated on construction via :func:`validate_embedding`; share freely
    across threads.
    """

    rotation: tuple[tuple[int, ...], ...]
    outer_facets: tuple[tuple[int, ...], ...] = ()

    @property
    def vertex_count(self) -> int:
        return len(self.rotation)

    @property
    def edges(self) -> tuple[Edge, ...]:
        out = set()
        for u, nbrs in enumerate(self.rotation):
            for v in nbrs:
                out.add(edge_key(u, v))
        return tuple(sorted(out))

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.rotation) // 2

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotation[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.rotation[u]

    def rotation_after(self, v: int, u: int) -> int:
        """Neighbour of v immediately after u in v's cyclic order."""
        nbrs = self.rotation[v]
        return nbrs[(nbrs.index(u) + 1) % len(nbrs)]

    def trace_faces(self) -> list[tuple[int, ...]]:
        """Recover all faces of the rotation system.

        Each face is a vertex cycle; every dart (directed edge) is consumed
        exactly once, so the sum of face lengths is 2E.
        """
        seen: set[tuple[int, int]] = set()
        faces = []
        for u, nbrs in enumerate(self.rotation):
            for v in nbrs:
                if (u, v) in seen:
                    continue
                face = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    face.append(a)
                    a, b = b, self.rotation_after(b, a)
                faces.append(tuple(face))
        return faces

    def is_mpg(self) -> bool:
        return not self.outer_facets

    def facets(self) -> tuple[Facet, ...]:
        outer_variants = set()
        for c in self.outer_facets:
            outer_variants |= _cycle_variants(tuple(c))
        out = []
        for face in self.trace_faces():
            kind = "outer" if tuple(face) in outer_variants else "triangle"
            out.append(Facet(kind, face))
        return tuple(out)

    def edge_facets(self) -> dict[Edge, tuple[int, ...]]:
        """Map each edge to the indices of the (exactly two) facets on it."""
        where: dict[Edge, list[int]] = {}
        for i, f in enumerate(self.facets()):
            for e in f.edges:
                where.setdefault(e, []).append(i)
        return {e: tuple(v) for e, v in where.items()}

    def diamond_of(self, u: int, v: int) -> Diamond:
        """The two apex vertices of edge uv, or its single triangle at the rim."""
        e = edge_key(u, v)
        if not self.has_edge(u, v):
            raise EmbeddingError(f"unknown edge {e}")
        facets = self.facets()
        sides = [facets[i] for i in self.edge_facets()[e]]
        tris = [f for f in sides if f.kind == "triangle"]
        apexes = []
        for f in tris:
            (apex,) = [w for w in f.vertices if w not in e]
            apexes.append(apex)
        if len(apexes) == 2:
            a, b = sorted(apexes)
            return Diamond(e, (a, b), along_outer=False)
        if len(apexes) == 1:
            return Diamond(e, (apexes[0], None), along_outer=True)
        raise EmbeddingError(f"edge {e} borders two outer facets; no triangle side")

    def triangles(self) -> tuple[Facet, ...]:
        return tuple(f for f in self.facets() if f.kind == "triangle")


def build_embedding(rotation: list[list[int]], outer_facets: list[list[int]] = ()) -> Embedding:
    e = Embedding(
        tuple(tuple(r) for r in rotation),
        tuple(tuple(c) for c in outer_facets),
    )
    validate_embedding(e)
    return e


def orient_faces(faces: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Flip faces of a sphere face list until all are consistently oriented.

    Every undirected edge must lie on exactly two faces.  Orientations are
    propagated from the first face; a parity conflict means the input is not
    the face list of a sphere embedding.
    """
    by_edge: dict[Edge, list[int]] = {}
    for i, f in enumerate(faces):
        for k in range(len(f)):
            by_edge.setdefault(edge_key(f[k], f[(k + 1) % len(f)]), []).append(i)
    for e, fs in by_edge.items():
        if len(fs) != 2:
            raise EmbeddingError(f"edge {e} lies on {len(fs)} faces, expected 2")
    oriented: dict[int, tuple[int, ...]] = {}
    for root in range(len(faces)):
        if root in oriented:
            continue
        oriented[root] = tuple(faces[root])
        todo = deque([root])
        while todo:
            i = todo.popleft()
            f = oriented[i]
            darts = {(f[k], f[(k + 1) % len(f)]) for k in range(len(f))}
            for (u, v) in darts:
                (j,) = [x for x in by_edge[edge_key(u, v)] if x != i]
                g = faces[j]
                gd = {(g[k], g[(k + 1) % len(g)]) for k in range(len(g))}
                want_flipped = (u, v) in gd  # neighbour must traverse v->u
                fixed = tuple(reversed(g)) if want_flipped else tuple(g)
                if j in oriented:
                    if oriented[j] != _rotate_to(fixed, oriented[j][0]):
                        raise EmbeddingError("face list is not orientable")
                else:
                    oriented[j] = fixed
                    todo.append(j)
    return [oriented[i] for i in range(len(faces))]


def _rotate_to(cycle: tuple[int, ...], first: int) -> tuple[int, ...]:
    i = cycle.index(first)
    return cycle[i:] + cycle[:i]


def embedding_from_faces(faces: list[tuple[int, ...]], outer: list[tuple[int, ...]] = ()) -> Embedding:
    """Build a rotation system from a face list covering the whole sphere.

    Outer facets count as faces; they are appended automatically.  Input
    orientations need not be consistent (see :func:`orient_faces`).  The
    rotation at v is recovered by chaining, for each oriented face
    (..., p, v, s, ...), the successor map p -> s.
    """
    faces = orient_faces(list(faces) + [tuple(c) for c in outer])
    darts = Counter()
    succ: dict[int, dict[int, int]] = {}
    nverts = 0
    for face in faces:
        k = len(face)
        for i in range(k):
            p, v, s = face[i - 1], face[i], face[(i + 1) % k]
            darts[(v, s)] += 1
            succ.setdefault(v, {})[p] = s
            nverts = max(nverts, v + 1)
    bad = [d for d, c in darts.items() if c != 1]
    if bad:
        raise EmbeddingError(f"face list not consistently oriented at darts {sorted(bad)[:4]}")
    rotation = []
    for v in range(nverts):
        if v not in succ:
            raise EmbeddingError(f"vertex {v} appears in no face")
        nbr_map = succ[v]
        start = next(iter(nbr_map))
        cyc = [start]
        while True:
            nxt = nbr_map[cyc[-1]]
            if nxt == start:
                break
            cyc.append(nxt)
            if len(cyc) > len(nbr_map):
                raise EmbeddingError(f"rotation at vertex {v} does not close into one cycle")
        if len(cyc) != len(nbr_map):
            raise EmbeddingError(f"rotation at vertex {v} splits into several cycles")
        rotation.append(tuple(cyc))
    return build_embedding(rotation, [tuple(c) for c in outer])


def validate_embedding(e: Embedding) -> None:
    """Check every structural invariant; raise EmbeddingError on the first failure."""
    n = e.vertex_count
    if n < 3:
        raise EmbeddingError("need at least 3 vertices")
    for v, nbrs in enumerate(e.rotation):
        if v in nbrs:
            raise EmbeddingError(f"self-loop at vertex {v}")
        if len(set(nbrs)) != len(nbrs):
            raise EmbeddingError(f"parallel edge in rotation of vertex {v}")
        for u in nbrs:
            if not (0 <= u < n):
                raise EmbeddingError(f"vertex {v} lists unknown neighbour {u}")
            if v not in e.rotation[u]:
                raise EmbeddingError(f"asymmetric adjacency: {v} lists {u} but not conversely")
    # connectivity
    seen = {0}
    todo = deque([0])
    while todo:
        v = todo.popleft()
        for u in e.rotation[v]:
            if u not in seen:
                seen.add(u)
                todo.append(u)
    if len(seen) != n:
        raise EmbeddingError("graph is not connected")

    faces = e.trace_faces()
    E = e.edge_count
    if sum(len(f) for f in faces) != 2 * E:
        raise EmbeddingError("face tracing does not consume every dart exactly once")
    if n - E + len(faces) != 2:
        raise EmbeddingError(
            f"Euler formula fails: V={n} E={E} F={len(faces)} gives {n - E + len(faces)}"
        )

    outer_variants = set()
    for c in e.outer_facets:
        if len(set(c)) != len(c):
            raise EmbeddingError(f"outer facet {c} repeats a vertex")
        variants = _cycle_variants(tuple(c))
        if not any(tuple(f) in variants for f in faces):
            raise EmbeddingError(f"declared outer facet {c} is not a face of the rotation system")
        outer_variants |= variants
    for f in faces:
        if len(f) != 3 and tuple(f) not in outer_variants:
            raise EmbeddingError(f"undeclared non-triangle face {f}")
    if e.is_mpg() and E != 3 * n - 6:
        raise EmbeddingError(f"MPG must have E = 3V-6, got V={n}, E={E}")


# ---------------------------------------------------------------------------
# Validation report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    is_mpg: bool
    outer_gon_sizes: tuple[int, ...]
    vertex_count: int
    edge_count: int
    face_count: int
    euler_ok: bool
    triangle_faces_ok: bool
    degree_histogram: dict[int, int] = field(default_factory=dict)
    degree5_count: int = 0

    def to_dict(self) -> dict:
        return {
            "is_mpg": self.is_mpg,
            "is_semi_mpg": not self.is_mpg,
            "outer_gon_sizes": list(self.outer_gon_sizes),
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "face_count": self.face_count,
            "euler_ok": self.euler_ok,
            "triangle_faces_ok": self.triangle_faces_ok,
            "degree_histogram": {str(k): v for k, v in sorted(self.degree_histogram.items())},
            "degree5_count": self.degree5_count,
        }


def validate_semi_mpg(e: Embedding) -> ValidationReport:
    """Full structural report for an already parsed embedding."""
    validate_embedding(e)
    degs = Counter(e.degree(v) for v in range(e.vertex_count))
    return ValidationReport(
        is_mpg=e.is_mpg(),
        outer_gon_sizes=tuple(sorted(len(c) for c in e.outer_facets)),
        vertex_count=e.vertex_count,
        edge_count=e.edge_count,
        face_count=len(e.trace_faces()),
        euler_ok=True,
        triangle_faces_ok=True,
        degree_histogram=dict(degs),
        degree5_count=degs.get(5, 0),
    )


# ---------------------------------------------------------------------------
# Graph file format
# ---------------------------------------------------------------------------


def parse_graph(text: str) -> Embedding:
    """Parse the line-based graph format.

    Format: a ``semimpg v1`` header, ``n <V>``, one ``rot <v>: <u1 ... uk>``
    line per vertex and zero or more ``outer: <v0 ... v(m-1)>`` lines.
    ``#`` starts a comment.
    """
    nv = None
    rotation: dict[int, list[int]] = {}
    outer: list[list[int]] = []
    header_seen = False
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not header_seen:
            if line != "semimpg v1":
                raise GraphFormatError("expected header 'semimpg v1'", ln, 1)
            header_seen = True
            continue
        if line.startswith("n "):
            try:
                nv = int(line[2:].strip())
            except ValueError:
                raise GraphFormatError("bad vertex count", ln, 3)
            continue
        if line.startswith("rot "):
            body = line[4:]
            if ":" not in body:
                raise GraphFormatError("missing ':' in rot line", ln, len("rot ") + 1)
            head, tail = body.split(":", 1)
            try:
                v = int(head.strip())
                nbrs = [int(tok) for tok in tail.split()]
            except ValueError:
                raise GraphFormatError("non-integer token in rot line", ln, 1)
            if v in rotation:
                raise GraphFormatError(f"duplicate rot line for vertex {v}", ln, 1)
            rotation[v] = nbrs
            continue
        if line.startswith("outer:"):
            try:
                outer.append([int(tok) for tok in line[6:].split()])
            except ValueError:
                raise GraphFormatError("non-integer token in outer line", ln, 1)
            continue
        raise GraphFormatError(f"unrecognised line {line!r}", ln, 1)
    if not header_seen:
        raise GraphFormatError("empty input: missing 'semimpg v1' header", 1, 1)
    if nv is None:
        raise GraphFormatError("missing 'n <V>' line", 1, 1)
    missing = [v for v in range(nv) if v not in rotation]
    if missing:
        raise GraphFormatError(f"missing rot line for vertices {missing}")
    extra = [v for v in rotation if not (0 <= v < nv)]
    if extra:
        raise GraphFormatError(f"rot lines for out-of-range vertices {sorted(extra)}")
    try:
        return build_embedding([rotation[v] for v in range(nv)], outer)
    except EmbeddingError as exc:
        raise GraphFormatError(str(exc)) from exc


def format_graph(e: Embedding) -> str:
    lines = ["semimpg v1", f"n {e.vertex_count}"]
    for v in range(e.vertex_count):
        lines.append(f"rot {v}: " + " ".join(map(str, e.rotation[v])))
    for c in e.outer_facets:
        lines.append("outer: " + " ".join(map(str, c)))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Regions (topic for discussion, boundary, inside/outside)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RegionSpec:
    """A TD vertex set, its boundary cycle and the two edge regions.

    ``omega`` is the boundary cycle in rotation order; ``sigma_edges`` covers
    TD-TD, TD-boundary and boundary cycle edges, ``sigma_prime_edges`` all
    edges avoiding TD.  Their intersection is exactly the cycle.
    """

    td: frozenset[int]
    omega: tuple[int, ...]
    sigma_edges: frozenset[Edge]
    sigma_prime_edges: frozenset[Edge]
    inside_facets: tuple[int, ...]  # facet indices of the host inside omega

    @property
    def omega_edges(self) -> tuple[Edge, ...]:
        k = len(self.omega)
        return tuple(edge_key(self.omega[i], self.omega[(i + 1) % k]) for i in range(k))

    def inner_sigma_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.sigma_edges - set(self.omega_edges)))


def region_of(e: Embedding, td: set[int]) -> RegionSpec:
    """Cut the embedding along the neighbourhood boundary of a TD vertex set."""
    td = frozenset(td)
    if not td:
        raise RegionError("TD is empty")
    # TD must induce a connected subgraph
    start = min(td)
    seen = {start}
    todo = deque([start])
    while todo:
        v = todo.popleft()
        for u in e.rotation[v]:
            if u in td and u not in seen:
                seen.add(u)
                todo.append(u)
    if seen != td:
        raise RegionError("TD does not induce a connected subgraph")
    boundary = {u for v in td for u in e.rotation[v]} - td
    if len(boundary) < 3:
        raise RegionError("boundary has fewer than 3 vertices")
    induced = {
        b: [u for u in e.rotation[b] if u in boundary]
        for b in boundary
    }
    for b, nbrs in induced.items():
        if len(nbrs) != 2:
            raise RegionError(
                f"boundary is not a simple cycle: vertex {b} has {len(nbrs)} boundary neighbours"
            )
    cyc = [min(boundary)]
    prev = None
    while True:
        a, b = induced[cyc[-1]]
        nxt = a if a != prev else b
        if nxt == cyc[0]:
            break
        prev = cyc[-1]
        cyc.append(nxt)
        if len(cyc) > len(boundary):
            raise RegionError("boundary is not a single cycle")
    if len(cyc) != len(boundary):
        raise RegionError("boundary splits into several cycles")
    omega = tuple(cyc)
    omega_edges = {
        edge_key(omega[i], omega[(i + 1) % len(omega)]) for i in range(len(omega))
    }
    sigma = set()
    for u, v in e.edges:
        if u in td or v in td:
            sigma.add(edge_key(u, v))
    sigma |= omega_edges
    sigma_prime = {edge_key(u, v) for u, v in e.edges if u not in td and v not in td}
    if sigma & sigma_prime != omega_edges:
        raise RegionError("sigma and sigma-prime overlap beyond the boundary cycle")
    inside = []
    closure = td | boundary
    for i, f in enumerate(e.facets()):
        if any(v in td for v in f.vertices):
            if f.kind != "triangle":
                raise RegionError("an outer facet touches TD; region is not a tiled disk")
            if not set(f.vertices) <= closure:
                raise RegionError("a facet at TD leaves TD and its boundary")
            inside.append(i)
    return RegionSpec(
        td=td,
        omega=omega,
        sigma_edges=frozenset(sigma),
        sigma_prime_edges=frozenset(sigma_prime),
        inside_facets=tuple(inside),
    )


def region_fragment(e: Embedding, region: RegionSpec) -> tuple[Embedding, dict[int, int]]:
    """The inside of a region as its own semi-MPG with the boundary as hole.

    Returns the fragment plus the host-to-fragment vertex map.
    """
    keep = sorted(region.td | set(region.omega))
    relabel = {old: new for new, old in enumerate(keep)}
    facets = e.facets()
    faces = [
        tuple(relabel[v] for v in facets[i].vertices) for i in region.inside_facets
    ]
    hole = tuple(relabel[v] for v in region.omega)
    return embedding_from_faces(faces, [hole]), relabel


# ---------------------------------------------------------------------------
# Surgery
# ---------------------------------------------------------------------------


def _face_corner(face: tuple[int, ...], v: int) -> tuple[int, int]:
    """(predecessor, successor) of v along the face cycle."""
    i = face.index(v)
    return face[i - 1], face[(i + 1) % len(face)]


def merge_surgery(
    e: Embedding,
    remove: set[int] = frozenset(),
    merge: tuple[int, int] | None = None,
    add_edges: list[Edge] = (),
) -> tuple[Embedding, dict[int, int]]:
    """Remove vertices, identify one vertex pair across a face, add chords.

    Returns the relabelled embedding plus the old-to-new vertex map.  Doubled
    adjacencies created by the merge collapse when they bound a bigon;
    anything else (merging adjacent vertices, genuine parallel edges, a
    rotation that no longer traces to a sphere) raises SurgeryError.
    """
    remove = set(remove)
    rot: dict[int, list[int]] = {
        v: [u for u in e.rotation[v] if u not in remove]
        for v in range(e.vertex_count)
        if v not in remove
    }

    def trace(rot_map: dict[int, list[int]]) -> list[tuple[int, ...]]:
        seen = set()
        faces = []
        for u in rot_map:
            for v in rot_map[u]:
                if (u, v) in seen:
                    continue
                face = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    face.append(a)
                    nbrs = rot_map[b]
                    a, b = b, nbrs[(nbrs.index(a) + 1) % len(nbrs)]
                faces.append(tuple(face))
        return faces

    if merge is not None:
        keep, absorb = merge
        for v in (keep, absorb):
            if v in remove or v not in rot:
                raise SurgeryError(f"merge vertex {v} is missing or removed")
        if absorb in rot[keep]:
            raise SurgeryError(f"cannot merge adjacent vertices {keep} and {absorb}")
        shared = [f for f in trace(rot) if keep in f and absorb in f]
        if not shared:
            raise SurgeryError(
                f"vertices {keep} and {absorb} share no face; merge would break planarity"
            )
        face = shared[0]
        pk, sk = _face_corner(face, keep)
        pa, sa = _face_corner(face, absorb)

        def linear_from(rot_list: list[int], start: int) -> list[int]:
            i = rot_list.index(start)
            return rot_list[i:] + rot_list[:i]

        merged = linear_from(rot[keep], sk) + linear_from(rot[absorb], sa)
        # rename absorb -> keep everywhere
        del rot[absorb]
        rot[keep] = merged
        for v in rot:
            rot[v] = [keep if u == absorb else u for u in rot[v]]
        # collapse bigons: duplicates are legal only when cyclically adjacent
        for v in list(rot):
            lst = rot[v]
            while True:
                dup = [u for u, c in Counter(lst).items() if c > 1]
                if not dup:
                    break
                u = dup[0]
                if Counter(lst)[u] > 2:
                    raise SurgeryError(f"merge creates a triple edge {v}-{u}")
                i, j = [k for k, x in enumerate(lst) if x == u]
                if j - i == 1 or (i == 0 and j == len(lst) - 1):
                    lst = [x for k, x in enumerate(lst) if k != j]
                else:
                    raise SurgeryError(f"merge creates a parallel edge {v}-{u}")
            rot[v] = lst

    for (x, y) in add_edges:
        if x not in rot or y not in rot:
            raise SurgeryError(f"edge endpoint missing for new edge {x}-{y}")
        if y in rot[x]:
            raise SurgeryError(f"new edge {x}-{y} already exists")
        shared = [f for f in trace(rot) if x in f and y in f]
        if not shared:
            raise SurgeryError(f"vertices {x} and {y} share no face; chord {x}-{y} not planar")
        face = shared[0]
        px, _ = _face_corner(face, x)
        py, _ = _face_corner(face, y)
        rot[x].insert(rot[x].index(px) + 1, y)
        rot[y].insert(rot[y].index(py) + 1, x)

    order = sorted(rot)
    relabel = {old: new for new, old in enumerate(order)}
    rotation = [[relabel[u] for u in rot[old]] for old in order]
    # keep declared outer facets that survived untouched
    survivors = []
    for c in e.outer_facets:
        if all(v in relabel for v in c):
            mapped = tuple(relabel[v] for v in c)
            survivors.append(mapped)
    candidate = Embedding(tuple(tuple(r) for r in rotation), ())
    faces = candidate.trace_faces()
    outer = []
    for c in survivors:
        if any(tuple(c) in _cycle_variants(tuple(f)) for f in faces):
            outer.append(c)
    nontri = [f for f in faces if len(f) != 3]
    for f in nontri:
        if not any(tuple(f) in _cycle_variants(tuple(c)) for c in outer):
            outer.append(tuple(f))
    try:
        out = build_embedding(rotation, outer)
    except EmbeddingError as exc:
        raise SurgeryError(f"surgery result is not a valid embedding: {exc}") from exc
    return out, relabel
