"""Exhaustive backtracking enumerators.

These are the oracles the rest of the package is verified against: tilings
are enumerated edge by edge in canonical order with colors tried in the
fixed order r < g < b < k, so the emitted stream is lexicographic and
reproducible; 4-colorings are enumerated vertex by vertex.
"""

from __future__ import annotations

from collections.abc import Iterator

from .embedding import Edge, Embedding
from .tiling import (
    K, MODE_PARTIAL, MODE_RGB, RGB, Tiling, TilingError, Y, mode_color,
)


def enumerate_tilings(
    e: Embedding,
    mode: str,
    limit: int | None = None,
    abandoned: tuple[Edge, ...] = (),
    fixed: dict[Edge, str] | None = None,
) -> Iterator[Tiling]:
    """Stream every tiling of the given mode, lexicographically.

    ``abandoned`` pins edges to y (partial mode only); ``fixed`` pins edges
    to concrete colors.  The stream is exhaustive up to ``limit`` and may be
    empty.
    """
    single = mode_color(mode)
    if abandoned and mode != MODE_PARTIAL:
        raise TilingError("abandoned edges need partial mode")
    palette = {
        MODE_RGB: RGB,
        MODE_PARTIAL: RGB,
    }.get(mode, (single, K) if single else None)

    edges = list(e.edges)
    eidx = {edge: i for i, edge in enumerate(edges)}
    abandoned = tuple(sorted(abandoned))
    for a in abandoned:
        if a not in eidx:
            raise TilingError(f"abandoned edge {a} not in the graph")

    tris = [f.edges for f in e.facets() if f.kind == "triangle"]
    tri_of_edge: dict[Edge, list[int]] = {edge: [] for edge in edges}
    for i, tri in enumerate(tris):
        for edge in tri:
            tri_of_edge[edge].append(i)
    relaxed = {
        i for a in abandoned for i in tri_of_edge[a]
    }  # triangles at an abandoned edge carry no rainbow constraint

    todo = [edge for edge in edges if edge not in abandoned]
    if fixed:
        for edge, col in fixed.items():
            if edge not in eidx:
                raise TilingError(f"fixed edge {edge} not in the graph")
    assign: dict[Edge, str] = {a: Y for a in abandoned}

    def tri_ok(ti: int) -> bool:
        cols = [assign.get(edge) for edge in tris[ti]]
        done = [c for c in cols if c is not None]
        if ti in relaxed:
            return True
        if single is None:
            # rainbow: no repeated color among the assigned ones
            return len(set(done)) == len(done)
        k = done.count(single)
        if k > 1:
            return False
        unassigned = 3 - len(done)
        return k + unassigned >= 1

    count = 0

    def rec(i: int) -> Iterator[Tiling]:
        nonlocal count
        if limit is not None and count >= limit:
            return
        if i == len(todo):
            t = Tiling.make(e, mode, dict(assign))
            count += 1
            yield t
            return
        edge = todo[i]
        choices = palette if not fixed or edge not in fixed else (fixed[edge],)
        for col in choices:
            assign[edge] = col
            if all(tri_ok(ti) for ti in tri_of_edge[edge]):
                yield from rec(i + 1)
            del assign[edge]

    yield from rec(0)


def count_tilings(e: Embedding, mode: str, limit: int | None = None, **kw) -> int:
    n = 0
    for _ in enumerate_tilings(e, mode, limit=limit, **kw):
        n += 1
    return n


def enumerate_four_colorings(
    e: Embedding, limit: int | None = None
) -> Iterator[dict[int, int]]:
    """Every proper vertex 4-coloring, by plain backtracking.

    Independent of the tiling machinery on purpose: this is the oracle for
    the coloring/tiling correspondence.
    """
    n = e.vertex_count
    colors = [0] * n
    count = 0

    def rec(v: int) -> Iterator[dict[int, int]]:
        nonlocal count
        if limit is not None and count >= limit:
            return
        if v == n:
            count += 1
            yield {i: colors[i] for i in range(n)}
            return
        used = {colors[u] for u in e.rotation[v] if u < v}
        for c in (1, 2, 3, 4):
            if c not in used:
                colors[v] = c
                yield from rec(v + 1)
        colors[v] = 0

    yield from rec(0)


def count_four_colorings(e: Embedding, limit: int | None = None) -> int:
    n = 0
    for _ in enumerate_four_colorings(e, limit=limit):
        n += 1
    return n
