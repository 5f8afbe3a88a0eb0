"""Edge tilings: RGB, single-colored and partial (with abandoned edges).

Color codes follow the file format: r/g/b for the three tile colors, k for
black (the non-distinguished color of a single-color tiling) and y for an
abandoned edge (drawn as a doubled line).  Pair classes for the fixed
coloring convention: {1,2}/{3,4} -> r, {1,3}/{2,4} -> g, {1,4}/{2,3} -> b.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType

from .embedding import Edge, Embedding, RGBTilingError, edge_key

R, G, B, K, Y = "r", "g", "b", "k", "y"
RGB = (R, G, B)

MODE_RGB = "rgb"
MODE_PARTIAL = "partial"


class TilingError(RGBTilingError):
    """Tiling violates its mode invariants or an operation precondition."""


def single_mode(c: str) -> str:
    if c not in RGB:
        raise TilingError(f"not a tile color: {c!r}")
    return f"single:{c}"


def mode_color(mode: str) -> str | None:
    """The distinguished color of a single-color mode, else None."""
    if mode.startswith("single:"):
        c = mode.split(":", 1)[1]
        if c not in RGB:
            raise TilingError(f"bad single-color mode {mode!r}")
        return c
    if mode in (MODE_RGB, MODE_PARTIAL):
        return None
    raise TilingError(f"unknown tiling mode {mode!r}")


def other_two(c: str) -> tuple[str, str]:
    a, b = [x for x in RGB if x != c]
    return a, b


@dataclass(frozen=True)
class Tiling:
    """An edge-color map over a validated embedding.  Immutable."""

    base: Embedding
    mode: str
    colors: MappingProxyType

    @staticmethod
    def make(base: Embedding, mode: str, colors: dict[Edge, str]) -> "Tiling":
        mode_color(mode)  # check the mode string
        cmap = {}
        for (u, v), col in colors.items():
            cmap[edge_key(u, v)] = col
        missing = [e for e in base.edges if e not in cmap]
        if missing:
            raise TilingError(f"no color for edges {missing[:4]}")
        if len(cmap) != base.edge_count:
            extra = set(cmap) - set(base.edges)
            raise TilingError(f"colors for unknown edges {sorted(extra)[:4]}")
        return Tiling(base, mode, MappingProxyType(cmap))

    def color(self, u: int, v: int) -> str:
        return self.colors[edge_key(u, v)]

    def edges_of_color(self, c: str) -> tuple[Edge, ...]:
        return tuple(sorted(e for e, col in self.colors.items() if col == c))

    @property
    def abandoned(self) -> tuple[Edge, ...]:
        return self.edges_of_color(Y)

    def with_colors(self, updates: dict[Edge, str], mode: str | None = None) -> "Tiling":
        cmap = dict(self.colors)
        for (u, v), col in updates.items():
            cmap[edge_key(u, v)] = col
        return Tiling.make(self.base, mode or self.mode, cmap)

    def word(self) -> tuple[str, ...]:
        """Colors in canonical edge order; the lexicographic sort key."""
        return tuple(self.colors[e] for e in self.base.edges)

    def key(self) -> tuple:
        return (self.mode, self.word())


@dataclass(frozen=True)
class TilingReport:
    ok: bool
    message: str = ""
    violating_facet: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate_tiling(t: Tiling) -> TilingReport:
    """Check the mode invariants; report the first violating triangle."""
    c = mode_color(t.mode)
    allowed = {
        MODE_RGB: set(RGB),
        MODE_PARTIAL: set(RGB) | {Y},
    }.get(t.mode, {c, K})
    for e, col in t.colors.items():
        if col not in allowed:
            return TilingReport(False, f"color {col!r} on edge {e} not allowed in mode {t.mode}")
    for f in t.base.facets():
        if f.kind != "triangle":
            continue
        cols = [t.colors[e] for e in f.edges]
        if t.mode == MODE_RGB:
            if sorted(cols) != [B, G, R]:
                return TilingReport(False, "triangle not rainbow", f.vertices)
        elif t.mode == MODE_PARTIAL:
            ab = cols.count(Y)
            if ab > 1:
                return TilingReport(False, "two abandoned edges in one triangle", f.vertices)
            if ab == 0 and sorted(cols) != [B, G, R]:
                return TilingReport(False, "triangle not rainbow", f.vertices)
        else:
            if cols.count(c) != 1:
                return TilingReport(False, f"triangle without exactly one {c} edge", f.vertices)
    return TilingReport(True)


def restrict_to_single(t: Tiling, c: str) -> Tiling:
    """Single-color view of an rgb tiling: keep c, blacken the rest."""
    if t.mode != MODE_RGB:
        raise TilingError("restriction needs an rgb tiling")
    cmap = {e: (c if col == c else K) for e, col in t.colors.items()}
    return Tiling.make(t.base, single_mode(c), cmap)


# ---------------------------------------------------------------------------
# Monochromatic odd cycles
# ---------------------------------------------------------------------------


def find_mono_odd_cycle(t: Tiling, c: str) -> tuple[int, ...] | None:
    """A simple odd cycle of c-colored edges, or None.

    Works by 2-coloring each c-component; an intra-level edge closes an odd
    cycle through the BFS tree, which is then trimmed at the meeting point.
    """
    adj: dict[int, list[int]] = {}
    for (u, v), col in t.colors.items():
        if col == c:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
    depth: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    for root in sorted(adj):
        if root in depth:
            continue
        depth[root] = 0
        parent[root] = None
        queue = [root]
        while queue:
            nxt = []
            for x in queue:
                for y in sorted(adj[x]):
                    if y not in depth:
                        depth[y] = depth[x] + 1
                        parent[y] = x
                        nxt.append(y)
                    elif depth[y] == depth[x]:
                        return _odd_cycle_through(x, y, parent)
            queue = nxt
    return None


def _odd_cycle_through(x: int, y: int, parent: dict[int, int | None]) -> tuple[int, ...]:
    px = [x]
    while parent[px[-1]] is not None:
        px.append(parent[px[-1]])
    py = [y]
    while parent[py[-1]] is not None:
        py.append(parent[py[-1]])
    sx, sy = set(px), set(py)
    lca = next(v for v in px if v in sy)
    cyc = px[: px.index(lca) + 1] + py[: py.index(lca)][::-1]
    return tuple(cyc)


def has_any_mono_odd_cycle(t: Tiling) -> bool:
    cols = RGB if t.mode in (MODE_RGB, MODE_PARTIAL) else (mode_color(t.mode),)
    return any(find_mono_odd_cycle(t, c) is not None for c in cols)


# ---------------------------------------------------------------------------
# Grand tilings
# ---------------------------------------------------------------------------


def check_grand(t: Tiling) -> tuple[frozenset[int], frozenset[int]] | None:
    """Witness bipartition for a single-color tiling, or None.

    The black subgraph must be bipartite across (V1, V2) with every black
    edge crossing, and no c edge may cross; that is a parity constraint per
    edge, solved by union-find with parity.
    """
    c = mode_color(t.mode)
    if c is None:
        raise TilingError("grandness is defined for single-color tilings")
    n = t.base.vertex_count
    parent = list(range(n))
    rank = [0] * n
    parity = [0] * n  # parity of the edge to the parent

    def froot(x: int) -> tuple[int, int]:
        path = []
        while parent[x] != x:
            path.append(x)
            x = parent[x]
        p = 0
        for v in reversed(path):
            p ^= parity[v]
            parity[v] = p
            parent[v] = x
        return x, (parity[path[0]] if path else 0)

    def union(x: int, y: int, rel: int) -> bool:
        rx, px = froot(x)
        ry, py = froot(y)
        if rx == ry:
            return (px ^ py) == rel
        if rank[rx] < rank[ry]:
            rx, ry, px, py = ry, rx, py, px
        parent[ry] = rx
        parity[ry] = px ^ py ^ rel
        if rank[rx] == rank[ry]:
            rank[rx] += 1
        return True

    for (u, v), col in t.colors.items():
        rel = 1 if col == K else 0  # black crosses the parts, c stays inside
        if not union(u, v, rel):
            return None
    sides: dict[tuple[int, int], set[int]] = {}
    for v in range(n):
        root, p = froot(v)
        sides.setdefault((root, p), set())
        sides[(root, p)].add(v)
    v1, v2 = set(), set()
    for (root, p), members in sides.items():
        (v1 if p == 0 else v2).update(members)
    if 0 in v2:
        v1, v2 = v2, v1
    return frozenset(v1), frozenset(v2)


# ---------------------------------------------------------------------------
# Completion single -> rgb
# ---------------------------------------------------------------------------


def complete_to_rgb(t: Tiling) -> Tiling:
    """2-color the black edges so that every triangle becomes rainbow.

    The conflict graph joins the two black edges of each triangle; it is a
    disjoint union of paths and cycles, so completion fails exactly on an odd
    conflict cycle, which is raised with its witness.
    """
    c = mode_color(t.mode)
    if c is None:
        raise TilingError("completion needs a single-color tiling")
    rep = validate_tiling(t)
    if not rep:
        raise TilingError(f"invalid tiling: {rep.message}")
    blacks = [e for e, col in t.colors.items() if col == K]
    nbr: dict[Edge, list[Edge]] = {e: [] for e in blacks}
    for f in t.base.facets():
        if f.kind != "triangle":
            continue
        bl = [e for e in f.edges if t.colors[e] == K]
        if len(bl) == 2:
            nbr[bl[0]].append(bl[1])
            nbr[bl[1]].append(bl[0])
    c1, c2 = other_two(c)
    assign: dict[Edge, str] = {}
    for start in sorted(blacks):
        if start in assign:
            continue
        assign[start] = c1
        queue = [start]
        while queue:
            e = queue.pop()
            for e2 in nbr[e]:
                want = c2 if assign[e] == c1 else c1
                if e2 not in assign:
                    assign[e2] = want
                    queue.append(e2)
                elif assign[e2] != want:
                    raise OddConflictCycle(_conflict_cycle(start, nbr), t)
    out = t.with_colors(assign, mode=MODE_RGB)
    rep = validate_tiling(out)
    if not rep:
        raise TilingError(f"completion produced an invalid tiling: {rep.message}")
    return out


class OddConflictCycle(TilingError):
    """Completion impossible: the black conflict graph has an odd cycle."""

    def __init__(self, cycle: list[Edge], tiling: Tiling):
        super().__init__(f"odd conflict cycle through {len(cycle)} black edges")
        self.cycle = cycle
        self.tiling = tiling


def _conflict_cycle(start: Edge, nbr: dict[Edge, list[Edge]]) -> list[Edge]:
    # conflict components have degree <= 2, so the component of `start`
    # containing a parity clash is a single cycle: walk it
    cyc = [start]
    prev = None
    while True:
        nxts = [e for e in nbr[cyc[-1]] if e != prev]
        if not nxts:
            return cyc
        prev = cyc[-1]
        cyc.append(nxts[0])
        if cyc[-1] == start:
            return cyc[:-1]


# ---------------------------------------------------------------------------
# Tilings <-> 4-colorings
# ---------------------------------------------------------------------------

_PAIR_CLASS = {
    frozenset({1, 2}): R, frozenset({3, 4}): R,
    frozenset({1, 3}): G, frozenset({2, 4}): G,
    frozenset({1, 4}): B, frozenset({2, 3}): B,
}


def is_proper_coloring(e: Embedding, f: dict[int, int]) -> bool:
    return all(f[u] != f[v] for u, v in e.edges)


def induce_tiling(e: Embedding, f: dict[int, int]) -> Tiling:
    """The rgb tiling read off a proper 4-coloring via the pair classes."""
    if set(f) != set(range(e.vertex_count)) or not set(f.values()) <= {1, 2, 3, 4}:
        raise TilingError("coloring must map every vertex to 1..4")
    if not is_proper_coloring(e, f):
        raise TilingError("coloring is not proper")
    cmap = {edge_key(u, v): _PAIR_CLASS[frozenset({f[u], f[v]})] for u, v in e.edges}
    t = Tiling.make(e, MODE_RGB, cmap)
    rep = validate_tiling(t)
    if not rep:
        raise TilingError(f"induced tiling invalid: {rep.message}")
    return t


def extract_four_coloring(
    t: Tiling,
    witness: tuple[frozenset[int], frozenset[int]] | None = None,
) -> dict[int, int]:
    """Proper 4-coloring from an odd-cycle-free grand single-color tiling.

    2-colors the c subgraph inside V1 with {1,2} and inside V2 with {3,4};
    black edges cross the partition, c edges alternate inside it.  The result
    is re-verified before returning.
    """
    c = mode_color(t.mode)
    if c is None:
        raise TilingError("extraction needs a single-color tiling")
    if find_mono_odd_cycle(t, c) is not None:
        raise TilingError(f"tiling has a {c} odd cycle")
    if witness is None:
        witness = check_grand(t)
        if witness is None:
            raise TilingError("tiling is not grand")
    v1, v2 = witness
    adj: dict[int, list[int]] = {v: [] for v in range(t.base.vertex_count)}
    for (u, v), col in t.colors.items():
        if col == c:
            if (u in v1) != (v in v1):
                raise TilingError(f"{c} edge {(u, v)} crosses the grand partition")
            adj[u].append(v)
            adj[v].append(u)
    coloring: dict[int, int] = {}
    for root in range(t.base.vertex_count):
        if root in coloring:
            continue
        lo, hi = (1, 2) if root in v1 else (3, 4)
        coloring[root] = lo
        queue = [root]
        while queue:
            x = queue.pop()
            lo, hi = (1, 2) if x in v1 else (3, 4)
            for y in adj[x]:
                want = hi if coloring[x] == lo else lo
                if y not in coloring:
                    coloring[y] = want
                    queue.append(y)
                elif coloring[y] == coloring[x]:
                    raise TilingError(f"{c} subgraph has an odd cycle inside a part")
    if not is_proper_coloring(t.base, coloring):
        raise TilingError("extracted coloring is not proper")
    return coloring


# ---------------------------------------------------------------------------
# Synonyms
# ---------------------------------------------------------------------------

_PERMS = (
    {R: R, G: G, B: B}, {R: R, G: B, B: G},
    {R: G, G: R, B: B}, {R: G, G: B, B: R},
    {R: B, G: R, B: G}, {R: B, G: G, B: R},
)


def synonym_orbit(t: Tiling) -> list[Tiling]:
    """All six color permutations of an rgb/partial tiling (abandoned fixed)."""
    if t.mode not in (MODE_RGB, MODE_PARTIAL):
        raise TilingError("synonyms act on rgb or partial tilings")
    out = []
    for perm in _PERMS:
        cmap = {e: perm.get(col, col) for e, col in t.colors.items()}
        out.append(Tiling.make(t.base, t.mode, cmap))
    return out


def synonym_canonical(t: Tiling) -> Tiling:
    """Lexicographically smallest tiling in the synonym orbit.  Idempotent."""
    return min(synonym_orbit(t), key=Tiling.word)


# ---------------------------------------------------------------------------
# Boundary words
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundaryWord:
    cycle: tuple[int, ...]
    word: tuple[str, ...]

    @property
    def counts(self) -> tuple[int, int, int]:
        return (self.word.count(R), self.word.count(G), self.word.count(B))

    @property
    def sorted_counts(self) -> tuple[int, int, int]:
        return tuple(sorted(self.counts))

    def equal_parity(self) -> bool:
        r, g, b = self.counts
        return r % 2 == g % 2 == b % 2


def boundary_word(t: Tiling, cycle: tuple[int, ...]) -> BoundaryWord:
    """Edge colors along a vertex cycle; abandoned edges are rejected."""
    k = len(cycle)
    word = []
    for i in range(k):
        u, v = cycle[i], cycle[(i + 1) % k]
        if not t.base.has_edge(u, v):
            raise TilingError(f"cycle edge {(u, v)} is not in the graph")
        col = t.color(u, v)
        if col == Y:
            raise TilingError(f"abandoned edge {(u, v)} on the boundary cycle")
        word.append(col)
    return BoundaryWord(tuple(cycle), tuple(word))


def bounds_tiled_disk(e: Embedding, cycle: tuple[int, ...]) -> bool:
    """True when one side of the cycle contains only triangle facets.

    Facets are split by removing dual links that cross cycle edges; on a
    sphere a simple cycle leaves exactly two sides.
    """
    k = len(cycle)
    cyc_edges = {edge_key(cycle[i], cycle[(i + 1) % k]) for i in range(k)}
    facets = e.facets()
    ef = e.edge_facets()
    adj: dict[int, set[int]] = {i: set() for i in range(len(facets))}
    for edge, (f1, f2) in ef.items():
        if edge not in cyc_edges:
            adj[f1].add(f2)
            adj[f2].add(f1)
    comp = {}
    for start in range(len(facets)):
        if start in comp:
            continue
        comp[start] = start
        queue = [start]
        while queue:
            x = queue.pop()
            for y in adj[x]:
                if y not in comp:
                    comp[y] = start
                    queue.append(y)
    sides: dict[int, list[int]] = {}
    for i, root in comp.items():
        sides.setdefault(root, []).append(i)
    if len(sides) != 2:
        return False
    return any(
        all(facets[i].kind == "triangle" for i in members)
        for members in sides.values()
    )
