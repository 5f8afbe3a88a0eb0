"""Dual graph with pseudo nodes, canal lines and canal-line ECS.

Nodes are triangle facets plus k pseudo nodes along every k-gon outer facet
(one per boundary edge position).  Every link crosses exactly one embedding
edge and carries that edge's color.  A canal line of color c walks the links
of the two other colors, pairing them at each triangle; in single-color mode
it walks the black links instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .embedding import Edge, Embedding, edge_key
from .tiling import MODE_RGB, Tiling, TilingError, mode_color, other_two, validate_tiling

Node = tuple  # ("tri", facet_index) | ("pseudo", outer_index, position)


@dataclass(frozen=True)
class DualLink:
    a: Node
    b: Node
    edge: Edge
    color: str

    def other(self, n: Node) -> Node:
        return self.b if n == self.a else self.a


@dataclass(frozen=True)
class DualGraph:
    base: Embedding
    nodes: tuple[Node, ...]
    links: tuple[DualLink, ...]

    def links_at(self, n: Node) -> tuple[DualLink, ...]:
        return tuple(l for l in self.links if n in (l.a, l.b))

    def link_for_edge(self, e: Edge) -> tuple[DualLink, ...]:
        return tuple(l for l in self.links if l.edge == e)


def build_dual(e: Embedding, t: Tiling) -> DualGraph:
    """One node per triangle, k pseudo nodes per k-gon outer facet."""
    if t.base is not e and t.base != e:
        raise TilingError("tiling does not belong to this embedding")
    facets = e.facets()
    nodes: list[Node] = []
    tri_node: dict[int, Node] = {}
    outer_index: dict[int, int] = {}
    n_outer = 0
    for i, f in enumerate(facets):
        if f.kind == "triangle":
            tri_node[i] = ("tri", i)
            nodes.append(tri_node[i])
        else:
            outer_index[i] = n_outer
            n_outer += 1
    pseudo_for: dict[tuple[int, Edge], Node] = {}
    for i, f in enumerate(facets):
        if f.kind != "triangle":
            oi = outer_index[i]
            for pos, edge in enumerate(f.edges):
                node = ("pseudo", oi, pos)
                nodes.append(node)
                pseudo_for[(i, edge)] = node
    links = []
    for edge, (f1, f2) in sorted(e.edge_facets().items()):
        ends = []
        for fi in (f1, f2):
            if fi in tri_node:
                ends.append(tri_node[fi])
            else:
                ends.append(pseudo_for[(fi, edge)])
        links.append(DualLink(ends[0], ends[1], edge, t.colors[edge]))
    return DualGraph(e, tuple(nodes), tuple(links))


@dataclass(frozen=True)
class CanalLine:
    """A maximal walk through the walkable links of one color system."""

    color: str
    nodes: tuple[Node, ...]
    links: tuple[DualLink, ...]
    kind: str  # "ring" | "path"

    @property
    def crossed_edges(self) -> tuple[Edge, ...]:
        return tuple(l.edge for l in self.links)


@dataclass(frozen=True)
class CanalSystem:
    color: str
    lines: tuple[CanalLine, ...]
    boundary_matching: tuple[tuple[Edge, Edge], ...]

    def rings(self) -> tuple[CanalLine, ...]:
        return tuple(l for l in self.lines if l.kind == "ring")


def _walkable_colors(t: Tiling, c: str) -> set[str]:
    if t.mode == MODE_RGB:
        return set(other_two(c))
    single = mode_color(t.mode)
    if single is not None:
        if single != c:
            raise TilingError(f"tiling is {t.mode}; canal color must be {single}")
        return {"k"}
    raise TilingError("canal extraction needs an rgb or single-color tiling")


def extract_canal_system(e: Embedding, t: Tiling, c: str) -> CanalSystem:
    """Decompose the non-c links into canal lines; deterministic.

    At every triangle the line pairs the two walkable links, so the walk is
    forced; lines are rings on MPGs and pseudo-to-pseudo paths otherwise.
    The entrance/exit pairs of the path lines form the boundary matching.
    """
    walkable = _walkable_colors(t, c)
    dual = build_dual(e, t)
    links_at: dict[Node, list[DualLink]] = {}
    for l in dual.links:
        if l.color in walkable:
            links_at.setdefault(l.a, []).append(l)
            links_at.setdefault(l.b, []).append(l)
    for node, ls in links_at.items():
        if node[0] == "tri" and len(ls) != 2:
            raise TilingError(f"triangle {node} has {len(ls)} walkable links, expected 2")

    seen: set[DualLink] = set()
    lines = []

    def walk_from(link: DualLink, start: Node) -> CanalLine:
        nodes = [start]
        links = []
        cur_link, cur_node = link, start
        while True:
            links.append(cur_link)
            seen.add(cur_link)
            cur_node = cur_link.other(cur_node)
            nodes.append(cur_node)
            if cur_node[0] == "pseudo":
                return CanalLine(c, tuple(nodes), tuple(links), "path")
            options = [l for l in links_at[cur_node] if l is not cur_link]
            nxt = options[0]
            if nxt in seen:
                return CanalLine(c, tuple(nodes), tuple(links), "ring")
            cur_link = nxt

    ordered = [l for l in dual.links if l.color in walkable]
    # paths first, launched from their pseudo ends; the rest are rings
    for link in ordered:
        if link in seen:
            continue
        if link.a[0] == "pseudo" or link.b[0] == "pseudo":
            start = link.a if link.a[0] == "pseudo" else link.b
            lines.append(walk_from(link, start))
    for link in ordered:
        if link not in seen:
            lines.append(walk_from(link, link.a))

    crossed = [e2 for line in lines for e2 in line.crossed_edges]
    expected = [l.edge for l in dual.links if l.color in walkable]
    if sorted(crossed) != sorted(expected):
        raise TilingError("canal lines do not partition the walkable links")

    matching = []
    for line in lines:
        if line.kind == "path":
            matching.append(tuple(sorted((line.links[0].edge, line.links[-1].edge))))
    return CanalSystem(c, tuple(lines), tuple(sorted(matching)))


def matching_is_noncrossing(e: Embedding, matching: tuple[tuple[Edge, Edge], ...]) -> bool:
    """Check the entrance/exit matching of a one-hole semi-MPG for crossings."""
    if len(e.outer_facets) != 1:
        raise TilingError("non-crossing check is defined for a single outer facet")
    cycle = tuple(e.outer_facets[0])
    k = len(cycle)
    pos = {edge_key(cycle[i], cycle[(i + 1) % k]): i for i in range(k)}
    chords = []
    for a, b in matching:
        if a == b:
            continue
        chords.append(tuple(sorted((pos[a], pos[b]))))
    for i in range(len(chords)):
        for j in range(i + 1, len(chords)):
            (a1, b1), (a2, b2) = chords[i], chords[j]
            if a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1:
                return False
    return True


def ecs_canal_ring(t: Tiling, line: CanalLine) -> Tiling:
    """Swap the two non-c colors on every edge the line crosses.

    Open lines follow the same rule.  An involution; validity of the result
    is asserted.
    """
    c = line.color
    if t.mode == MODE_RGB or t.mode == "partial":
        c1, c2 = other_two(c)
        swap = {c1: c2, c2: c1}
    else:
        swap = {}  # single mode: the only non-c color is black; nothing moves
    updates = {}
    for l in line.links:
        col = t.colors[l.edge]
        if l.color != col:
            raise TilingError(f"stale canal line: edge {l.edge} changed color")
        updates[l.edge] = swap.get(col, col)
    out = t.with_colors(updates)
    rep = validate_tiling(out)
    if not rep:
        raise TilingError(f"canal ECS broke the tiling: {rep.message}")
    return out
