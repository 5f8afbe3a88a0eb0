"""Local configuration templates and gluing.

A template is a triangulated-disk fragment with one boundary cycle and
degree requirements on its interior (and some boundary) vertices.  Gluing
identifies the fragment boundary with a matching hole of a host semi-MPG;
a fresh region can be carved out of an MPG host first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .embedding import (
    Edge, Embedding, EmbeddingError, RegionSpec, RGBTilingError,
    embedding_from_faces, build_embedding, region_of, validate_embedding,
)


class TemplateError(RGBTilingError):
    pass


@dataclass(frozen=True)
class Template:
    """Fragment embedding, its boundary cycle, and degree requirements.

    ``degree_req`` maps fragment vertex ids to required degrees after
    gluing; boundary vertices acquire extra incidences from the host, so
    only requirements that the gluing can still check are recorded.
    """

    name: str
    fragment: Embedding
    boundary: tuple[int, ...]
    degree_req: dict[int, int]
    marked: dict[str, int]  # human labels -> fragment vertex ids


def _fragment(faces, boundary, degree_req, marked, name) -> Template:
    emb = embedding_from_faces(faces, [boundary])
    return Template(name, emb, tuple(boundary), degree_req, marked)


def pentagon_hub() -> Template:
    # wheel: hub 0, rim 1..5
    faces = [(0, i, i % 5 + 1) for i in range(1, 6)]
    return _fragment(
        faces, (1, 2, 3, 4, 5), {0: 5},
        {"hub": 0}, "Ptg",
    )


def adjacent_pair_55() -> Template:
    # a=0, b=1 inside hexagon d-v1-v2-c-v4-v5 = 2..7
    a, b, d, v1, v2, c, v4, v5 = range(8)
    faces = [
        (a, v1, d), (a, v2, v1), (a, c, v2), (a, b, c),
        (a, d, b), (b, d, v5), (b, v5, v4), (b, v4, c),
    ]
    return _fragment(
        faces, (d, v1, v2, c, v4, v5), {a: 5, b: 5},
        {"a": a, "b": b, "c": c, "d": d}, "TD55",
    )


def triangle_5cubed() -> Template:
    a, b, c, d, v1, v2, v3, v4, v5 = range(9)
    faces = [
        (a, b, c), (a, d, b), (a, v1, d), (a, v2, v1),
        (a, c, v2), (c, v3, v2), (c, v4, v3), (c, b, v4),
        (b, v5, v4), (b, d, v5),
    ]
    return _fragment(
        faces, (d, v1, v2, v3, v4, v5), {a: 5, b: 5, c: 5},
        {"a": a, "b": b, "c": c, "d": d}, "TD5cubed",
    )


def diamond_5fourth() -> Template:
    a, b, c, d = 0, 1, 2, 3
    v1, v2, v3, v4, v5, v6 = 4, 5, 6, 7, 8, 9
    faces = [
        (a, b, c), (a, d, b),
        (a, v1, d), (a, v2, v1), (a, c, v2),
        (c, v3, v2), (c, v4, v3), (c, b, v4),
        (b, v5, v4), (b, d, v5),
        (d, v6, v5), (d, v1, v6),
    ]
    return _fragment(
        faces, (v1, v2, v3, v4, v5, v6), {a: 5, b: 5, c: 5, d: 5},
        {"a": a, "b": b, "c": c, "d": d}, "TD5fourth",
    )


def hat_5cubed() -> Template:
    # the 5^3 disk ringed by u1..u6; boundary degree pattern (5,6) alternating
    a, b, c, d = 0, 1, 2, 3
    v1, v2, v3, v4, v5 = 4, 5, 6, 7, 8
    u1, u2, u3, u4, u5, u6 = 9, 10, 11, 12, 13, 14
    faces = [
        (a, b, c), (a, d, b), (a, v1, d), (a, v2, v1),
        (a, c, v2), (c, v3, v2), (c, v4, v3), (c, b, v4),
        (b, v5, v4), (b, d, v5),
        (d, v1, u1), (v1, u2, u1), (v1, v2, u2), (v2, u3, u2),
        (v2, v3, u3), (v3, u4, u3), (v3, v4, u4), (v4, u5, u4),
        (v4, v5, u5), (v5, u6, u5), (v5, d, u6), (d, u1, u6),
    ]
    return _fragment(
        faces, (u1, u2, u3, u4, u5, u6),
        {a: 5, b: 5, c: 5, d: 6, v1: 5, v2: 6, v3: 5, v4: 6, v5: 5},
        {"a": a, "b": b, "c": c, "d": d,
         "v1": v1, "v2": v2, "v3": v3, "v4": v4, "v5": v5}, "HatTD",
    )


def two_inside_m1() -> Template:
    # the other two-interior-vertex wiring: arcs overlap at v1 and v4
    a, b, d, v1, v2, c, v4, v5 = range(8)
    faces = [
        (a, b, v1), (a, v4, b), (a, v1, v2), (a, v2, c), (a, c, v4),
        (b, v4, v5), (b, v5, d), (b, d, v1),
    ]
    return _fragment(
        faces, (d, v1, v2, c, v4, v5), {a: 5, b: 5},
        {"a": a, "b": b}, "M1",
    )


def two_inside_m2() -> Template:
    # mirror image of M1
    a, b, d, v1, v2, c, v4, v5 = range(8)
    faces = [
        (a, v1, b), (a, b, v4), (a, v2, v1), (a, c, v2), (a, v4, c),
        (b, v5, v4), (b, d, v5), (b, v1, d),
    ]
    return _fragment(
        faces, (d, v1, v2, c, v4, v5), {a: 5, b: 5},
        {"a": a, "b": b}, "M2",
    )


TEMPLATES = {
    "Ptg": pentagon_hub,
    "TD55": adjacent_pair_55,
    "TD5cubed": triangle_5cubed,
    "TD5fourth": diamond_5fourth,
    "HatTD": hat_5cubed,
    "M1": two_inside_m1,
    "M2": two_inside_m2,
}


def get_template(name: str) -> Template:
    if name not in TEMPLATES:
        raise TemplateError(f"unknown template {name!r}; choose from {sorted(TEMPLATES)}")
    return TEMPLATES[name]()


@dataclass(frozen=True)
class GlueReport:
    embedding: Embedding
    fragment_map: dict[int, int]  # fragment vertex -> host vertex
    achieved_degrees: dict[str, int]
    requirements_met: bool


def carve_region(host: Embedding, td: set[int]) -> tuple[Embedding, dict[int, int]]:
    """Remove a TD's interior, leaving its boundary cycle as a hole."""
    region = region_of(host, td)
    keep = sorted(set(range(host.vertex_count)) - set(td))
    relabel = {old: new for new, old in enumerate(keep)}
    rotation = [
        [relabel[u] for u in host.rotation[old] if u not in td] for old in keep
    ]
    hole = tuple(relabel[v] for v in region.omega)
    outer = [tuple(relabel[v] for v in c) for c in host.outer_facets]
    emb = build_embedding(rotation, outer + [hole])
    return emb, relabel


def instantiate_template(
    template: Template | str,
    host: Embedding,
    at: int | tuple[int, ...],
    align: int = 0,
    reverse: bool = False,
) -> GlueReport:
    """Glue a template fragment into a hole of the host.

    ``at`` names the host hole: an outer-facet index or its vertex cycle.
    ``align`` rotates and ``reverse`` flips the identification.  The glued
    boundary must match the fragment boundary length; achieved degrees of
    the template's labelled vertices are reported and checked against the
    requirements.
    """
    if isinstance(template, str):
        template = get_template(template)
    if isinstance(at, int):
        try:
            hole = tuple(host.outer_facets[at])
        except IndexError:
            raise TemplateError(f"host has no outer facet {at}")
    else:
        hole = tuple(at)
        if not any(set(hole) == set(c) for c in host.outer_facets):
            raise TemplateError(f"cycle {hole} is not an outer facet of the host")
        hole = next(tuple(c) for c in host.outer_facets if set(c) == set(hole))
    k = len(hole)
    if k != len(template.boundary):
        raise TemplateError(
            f"attachment length mismatch: hole {k}, template boundary {len(template.boundary)}"
        )
    frag = template.fragment
    interior = [v for v in range(frag.vertex_count) if v not in template.boundary]
    n0 = host.vertex_count
    fmap: dict[int, int] = {}
    for i, v in enumerate(interior):
        fmap[v] = n0 + i
    hole_seq = tuple(reversed(hole)) if reverse else hole
    hole_seq = hole_seq[align:] + hole_seq[:align]
    for i, v in enumerate(template.boundary):
        fmap[v] = hole_seq[i]

    # rebuild by faces: host faces minus the hole, plus mapped fragment faces
    from .embedding import _cycle_variants

    host_faces = host.trace_faces()
    hole_variants = _cycle_variants(tuple(hole))
    kept = [tuple(f) for f in host_faces if tuple(f) not in hole_variants]
    frag_boundary_variants = _cycle_variants(tuple(template.boundary))
    frag_faces = [
        tuple(fmap[v] for v in f)
        for f in frag.trace_faces()
        if tuple(f) not in frag_boundary_variants
    ]
    outer = [tuple(c) for c in host.outer_facets if tuple(c) not in hole_variants]
    try:
        emb = embedding_from_faces(kept + frag_faces, outer)
    except EmbeddingError as exc:
        raise TemplateError(f"gluing failed: {exc}") from exc
    achieved = {
        label: emb.degree(fmap[v]) for label, v in template.marked.items()
    }
    met = all(
        emb.degree(fmap[v]) == want for v, want in template.degree_req.items()
    )
    return GlueReport(emb, fmap, achieved, met)
