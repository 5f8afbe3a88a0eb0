"""Diamond routes: sequences of distinct c-edges whose consecutive diamonds
share a black edge, their edge-color-switch, and orientation sets.

In the dual a route alternates c links and black links; in rgb mode the two
non-c colors are both read as black.  A directed route is driven by its
current out-triangle: pick one of its two black edges, cross it, land in the
in-triangle of the next c-edge, cross that edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .embedding import Edge, Embedding, edge_key
from .tiling import K, MODE_RGB, Tiling, TilingError, mode_color, validate_tiling


class RouteError(TilingError):
    pass


@dataclass(frozen=True)
class DiamondRoute:
    """Route (e1, ..., ek) plus the shared black edges between the steps.

    ``blacks`` has k-1 entries for an open route and k for a ring (the last
    one closes the walk back into the initial in-triangle).  ``out_tris`` and
    ``in_tris`` are facet indices; the in side of a boundary edge is None.
    """

    color: str
    edges: tuple[Edge, ...]
    blacks: tuple[Edge, ...]
    in_tris: tuple[int | None, ...]
    out_tris: tuple[int | None, ...]
    is_ring: bool

    def __len__(self) -> int:
        return len(self.edges)


def _color_view(t: Tiling, c: str) -> dict[Edge, str]:
    """Collapse the tiling to {c, black}; rgb colors other than c read black."""
    single = mode_color(t.mode)
    if single is not None and single != c:
        raise RouteError(f"tiling is {t.mode}; route color must be {single}")
    if single is None and t.mode != MODE_RGB:
        raise RouteError("routes need a single-color or rgb tiling")
    return {e: (c if col == c else K) for e, col in t.colors.items()}


class _RouteSpace:
    """Shared indexing for route searches over one tiling and color."""

    def __init__(self, t: Tiling, c: str):
        self.t = t
        self.c = c
        self.view = _color_view(t, c)
        self.base = t.base
        self.facets = self.base.facets()
        self.edge_facets = self.base.edge_facets()
        self.c_edge_of_tri: dict[int, Edge] = {}
        self.blacks_of_tri: dict[int, tuple[Edge, ...]] = {}
        for i, f in enumerate(self.facets):
            if f.kind != "triangle":
                continue
            cs = [e for e in f.edges if self.view[e] == c]
            if len(cs) != 1:
                raise RouteError(f"triangle {f.vertices} has {len(cs)} {c} edges")
            self.c_edge_of_tri[i] = cs[0]
            self.blacks_of_tri[i] = tuple(sorted(e for e in f.edges if e != cs[0]))

    def tri_sides(self, e: Edge) -> list[int]:
        """Facet indices of the triangle sides of an edge (0, 1 or 2 of them)."""
        return [i for i in self.edge_facets[e] if self.facets[i].kind == "triangle"]

    def other_side(self, e: Edge, tri: int) -> int | None:
        """The facet across edge e from triangle tri; None when it is outer."""
        f1, f2 = self.edge_facets[e]
        other = f2 if f1 == tri else f1
        return other if self.facets[other].kind == "triangle" else None


def search_diamond_route(
    t: Tiling,
    from_: tuple[Edge, int],
    to: Edge | str,
    max_len: int = 40,
) -> DiamondRoute | None:
    """First route from the initial diamond to the target, or None.

    ``from_`` is (c-edge, apex) selecting the initial out-triangle; ``to`` is
    a specific c-edge, "outer" (terminate on a boundary c-edge) or "ring".
    Exhaustive DFS with lowest-edge-first tie-breaking; all c-edges on a
    route are distinct and the length is capped.
    """
    e1, apex = edge_key(*from_[0]), from_[1]
    c = t.colors[e1]
    if c not in ("r", "g", "b"):
        raise RouteError(f"initial edge {e1} is not a tile color (got {c!r})")
    space = _RouteSpace(t, c)
    target = to if isinstance(to, str) else edge_key(*to)
    return _search(space, e1, apex, target, max_len)


def _initial_tris(space: _RouteSpace, e1: Edge, apex: int) -> tuple[int | None, int | None]:
    sides = space.tri_sides(e1)
    out_tri = None
    for i in sides:
        if apex in space.facets[i].vertices and apex not in e1:
            out_tri = i
    if out_tri is None:
        raise RouteError(f"apex {apex} does not name a triangle of edge {e1}")
    others = [i for i in sides if i != out_tri]
    in_tri = others[0] if others else None
    return in_tri, out_tri


def _search(space, e1: Edge, apex: int, to, max_len: int) -> DiamondRoute | None:
    c = space.c
    if space.view[e1] != c:
        raise RouteError(f"initial edge {e1} is not {c}-colored")
    in1, out1 = _initial_tris(space, e1, apex)

    edges = [e1]
    blacks: list[Edge] = []
    in_tris: list[int | None] = [in1]
    out_tris: list[int | None] = [out1]
    used = {e1}

    def success(is_ring: bool) -> DiamondRoute:
        return DiamondRoute(
            c, tuple(edges), tuple(blacks), tuple(in_tris), tuple(out_tris), is_ring
        )

    def rec() -> DiamondRoute | None:
        cur = out_tris[-1]
        if to == "outer" and cur is None and len(edges) >= 2:
            return success(False)  # last c-edge lies on an outer facet
        if isinstance(to, tuple) and edges[-1] == to:
            return success(False)
        if cur is None or len(edges) >= max_len:
            return None
        for b in space.blacks_of_tri[cur]:
            nxt = space.other_side(b, cur)
            if nxt is None:
                continue  # black gate to the boundary: routes stop at c-edges
            e_next = space.c_edge_of_tri[nxt]
            if to == "ring" and e_next == e1:
                if nxt == in_tris[0] and len(edges) >= 2:
                    blacks.append(b)
                    out = success(True)
                    blacks.pop()
                    return out
                continue
            if e_next in used:
                continue
            far = space.other_side(e_next, nxt)
            edges.append(e_next)
            blacks.append(b)
            in_tris.append(nxt)
            out_tris.append(far)
            used.add(e_next)
            got = rec()
            if got is not None:
                return got
            used.discard(e_next)
            edges.pop()
            blacks.pop()
            in_tris.pop()
            out_tris.pop()
        return None

    if isinstance(to, tuple) and e1 == to:
        return success(False)
    return rec()


def ecs_diamond_route(t: Tiling, r: DiamondRoute) -> Tiling:
    """Toggle c and black along the route's dual walk.

    Accepted walks: rings, or open routes whose both terminal c-edges lie on
    outer facets.  Every crossed triangle swaps one c edge for one black
    edge, so per-triangle counts survive; the result is re-validated and the
    operation is an involution on the same walk.
    """
    c = r.color
    single = mode_color(t.mode)
    if single != c:
        raise RouteError("route ECS applies to the matching single-color tiling")
    if not r.is_ring:
        if r.in_tris[0] is not None or r.out_tris[-1] is not None:
            raise RouteError(
                "open route must start and end on outer-facet c-edges "
                "(interior terminal would orphan a triangle)"
            )
    toggled = list(r.edges) + list(r.blacks)
    if len(set(toggled)) != len(toggled):
        raise RouteError("route crosses an edge twice")
    updates = {}
    for e in toggled:
        updates[e] = K if t.colors[e] == c else c
    out = t.with_colors(updates)
    rep = validate_tiling(out)
    if not rep:
        raise RouteError(f"route ECS broke the tiling: {rep.message}")
    return out


# ---------------------------------------------------------------------------
# Orientation by an initiator
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrientationSets:
    initial: tuple[Edge, int]
    out_tris: frozenset[int]
    in_tris: frozenset[int]
    bi: frozenset[int]
    non: frozenset[int]
    uni: frozenset[int]
    exceptional_in: frozenset[int]  # in-triangles of boundary c-edges

    def partition_ok(self, e: Embedding) -> bool:
        tris = {i for i, f in enumerate(e.facets()) if f.kind == "triangle"}
        return (
            self.bi | self.non | self.uni == tris
            and not (self.bi & self.non)
            and not (self.bi & self.uni)
            and not (self.non & self.uni)
        )


def orientation_sets(t: Tiling, initial: tuple[Edge, int], max_len: int = 40) -> OrientationSets:
    """OT/IT by exhaustive directed-route enumeration from the initiator.

    Every prefix of a route is a route, so in/out triangles are recorded as
    the DFS walks; BiT/NonT/UniT are derived afterwards.
    """
    e1, apex = edge_key(*initial[0]), initial[1]
    c = t.colors[e1]
    space = _RouteSpace(t, c)
    if space.view[e1] != c:
        raise RouteError(f"initial edge {e1} is not colored")
    in1, out1 = _initial_tris(space, e1, apex)

    OT: set[int] = {out1}
    IT: set[int] = set()
    exceptional: set[int] = set()
    if in1 is not None:
        IT.add(in1)

    used = {e1}

    def rec(cur_out: int | None, depth: int) -> None:
        if cur_out is None or depth >= max_len:
            return
        for b in space.blacks_of_tri[cur_out]:
            nxt = space.other_side(b, cur_out)
            if nxt is None:
                continue
            e_next = space.c_edge_of_tri[nxt]
            if e_next in used:
                continue
            far = space.other_side(e_next, nxt)
            IT.add(nxt)
            if far is None:
                exceptional.add(nxt)
            else:
                OT.add(far)
            used.add(e_next)
            rec(far, depth + 1)
            used.discard(e_next)

    rec(out1, 1)
    tris = {i for i, f in enumerate(t.base.facets()) if f.kind == "triangle"}
    bi = OT & IT
    non = tris - (OT | IT)
    uni = tris - bi - non
    return OrientationSets(
        (e1, apex),
        frozenset(OT),
        frozenset(IT),
        frozenset(bi),
        frozenset(non),
        frozenset(uni),
        frozenset(exceptional),
    )


def search_route_rings(
    t: Tiling, c: str, max_len: int = 40, limit: int | None = None
) -> list[DiamondRoute]:
    """All distinct diamond-route rings, deduplicated up to rotation.

    Used by the ECS sweeps: every c-edge/apex pair seeds a ring search and
    every found ring is canonicalised by its crossed edge set.
    """
    space = _RouteSpace(t, c)
    rings: dict[frozenset, DiamondRoute] = {}
    for e in sorted(space.view):
        if space.view[e] != c:
            continue
        for tri in space.tri_sides(e):
            apex = [v for v in space.facets[tri].vertices if v not in e][0]
            r = _search(space, e, apex, "ring", max_len)
            if r is not None:
                key = frozenset(r.edges) | frozenset(r.blacks)
                rings.setdefault(key, r)
                if limit is not None and len(rings) >= limit:
                    return list(rings.values())
    return list(rings.values())
