"""Shipped desk-scale graphs.

All corpus graphs are built from face lists (orientation fixed
automatically), so the rotation systems are correct by construction and
re-checked by the validator.  ``get(name)`` is the lookup used by the CLI.
"""

from __future__ import annotations

from .embedding import Embedding, embedding_from_faces


def k4() -> Embedding:
    faces = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]
    return embedding_from_faces(faces)


def octahedron() -> Embedding:
    # 0 on top of the 1-2-3-4 ring, 5 below it
    faces = [
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 1),
        (5, 2, 1), (5, 3, 2), (5, 4, 3), (5, 1, 4),
    ]
    return embedding_from_faces(faces)


def _icosahedron_faces() -> list[tuple[int, int, int]]:
    u = [1, 2, 3, 4, 5]       # upper ring
    w = [6, 7, 8, 9, 10]      # lower ring
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces.append((0, u[i], u[j]))
        faces.append((u[j], u[i], w[i]))
        faces.append((w[i], w[j], u[j]))
        faces.append((11, w[j], w[i]))
    return faces


def icosahedron() -> Embedding:
    return embedding_from_faces(_icosahedron_faces())


def icosahedron_minus_vertex() -> Embedding:
    """Icosahedron with the top vertex deleted: a 5-semi-MPG."""
    faces = [f for f in _icosahedron_faces() if 0 not in f]
    hole = (1, 2, 3, 4, 5)
    relabel = {v: v - 1 for v in range(1, 12)}
    faces = [tuple(relabel[v] for v in f) for f in faces]
    hole = tuple(relabel[v] for v in hole)
    return embedding_from_faces(faces, [hole])


def seven_semi() -> Embedding:
    """Triangulated disk with a 7-gon rim and three interior vertices.

    Rim 0..6; interior triangle a=7, b=8, c=9.
    """
    a, b, c = 7, 8, 9
    faces = [
        (0, 1, a), (1, 2, a), (2, 3, b), (3, 4, b),
        (4, 5, c), (5, 6, c), (6, 0, c),
        (2, b, a), (4, c, b), (0, a, c),
        (a, b, c),
    ]
    return embedding_from_faces(faces, [(0, 1, 2, 3, 4, 5, 6)])


def annulus75() -> Embedding:
    """(7,5)-semi-MPG: a triangulated annulus between a 7-gon and a 5-gon.

    Outer rim 0..6, inner rim 7..11.  Each inner vertex covers an arc of the
    outer rim; consecutive arcs overlap at single outer vertices.
    """
    w = [7, 8, 9, 10, 11]
    arcs = {7: (0, 1), 8: (1, 2), 9: (2, 3, 4), 10: (4, 5), 11: (5, 6, 0)}
    faces = []
    for i in range(5):
        wi, wj = w[i], w[(i + 1) % 5]
        arc = arcs[wi]
        for k in range(len(arc) - 1):
            faces.append((arc[k], arc[k + 1], wi))
        faces.append((arcs[wj][0], wj, wi))
    return embedding_from_faces(faces, [(0, 1, 2, 3, 4, 5, 6), (7, 8, 9, 10, 11)])


def td55_host() -> Embedding:
    """4-colorable MPG with two adjacent degree-5 vertices inside a hexagon.

    Interior pair a=0, b=1; hexagon d-v1-v2-c-v4-v5 = 2-3-4-5-6-7; the
    outside of the hexagon is closed by w1=8, w2=9.  The two hexagon vertices
    v2 and v4 share no neighbour besides c, which keeps the remove/merge
    surgery on this host free of parallel edges.
    """
    a, b, d, v1, v2, c, v4, v5, w1, w2 = range(10)
    faces = [
        (a, v1, d), (a, v2, v1), (a, c, v2), (a, b, c),
        (a, d, b), (b, d, v5), (b, v5, v4), (b, v4, c),
        (d, v1, w1), (v1, v2, w1), (v2, c, w1),
        (c, w2, w1), (c, v4, w2), (v4, v5, w2),
        (v5, d, w2), (d, w1, w2),
    ]
    return embedding_from_faces(faces)


def tri5_host() -> Embedding:
    """4-colorable MPG with a triangle of degree-5 vertices inside a hexagon.

    a=0, b=1, c=2 form the degree-5 triangle; hexagon d-v1-v2-v3-v4-v5 =
    3-4-5-6-7-8; shell w1=9, w2=10.
    """
    a, b, c, d, v1, v2, v3, v4, v5, w1, w2 = range(11)
    faces = [
        (a, b, c), (a, d, b), (a, v1, d), (a, v2, v1),
        (a, c, v2), (c, v3, v2), (c, v4, v3), (c, b, v4),
        (b, v5, v4), (b, d, v5),
        (d, v1, w1), (v1, v2, w1), (v2, v3, w1),
        (v3, w2, w1), (v3, v4, w2), (v4, v5, w2),
        (v5, d, w2), (d, w1, w2),
    ]
    return embedding_from_faces(faces)


def diamond5_host() -> Embedding:
    """4-colorable MPG with a diamond of four degree-5 vertices in a hexagon.

    a=0, b=1 share the diamond edge, apexes c=2, d=3; hexagon v1..v6 = 4..9;
    shell w1=10, w2=11.
    """
    a, b, c, d = 0, 1, 2, 3
    v1, v2, v3, v4, v5, v6 = 4, 5, 6, 7, 8, 9
    w1, w2 = 10, 11
    faces = [
        (a, b, c), (a, d, b),
        (a, v1, d), (a, v2, v1), (a, c, v2),
        (c, v3, v2), (c, v4, v3), (c, b, v4),
        (b, v5, v4), (b, d, v5),
        (d, v6, v5), (d, v1, v6),
        (v6, v1, w1), (v1, v2, w1), (v2, v3, w1),
        (v3, w2, w1), (v3, v4, w2), (v4, v5, w2),
        (v5, v6, w2), (v6, w1, w2),
    ]
    return embedding_from_faces(faces)


def hat_host() -> Embedding:
    """Degree-5 triangle plus its (5,6)-alternating hexagon, capped outside.

    The inner disk repeats :func:`tri5_host` (a,b,c inside hexagon
    d-v1-..-v5 = 3..8), ringed by u1..u6 = 9..14 and capped with 15, so that
    deg(d,v2,v4)=6 and deg(v1,v3,v5)=5.
    """
    a, b, c, d = 0, 1, 2, 3
    v1, v2, v3, v4, v5 = 4, 5, 6, 7, 8
    u1, u2, u3, u4, u5, u6 = 9, 10, 11, 12, 13, 14
    top = 15
    faces = [
        (a, b, c), (a, d, b), (a, v1, d), (a, v2, v1),
        (a, c, v2), (c, v3, v2), (c, v4, v3), (c, b, v4),
        (b, v5, v4), (b, d, v5),
        (d, v1, u1), (v1, u2, u1), (v1, v2, u2), (v2, u3, u2),
        (v2, v3, u3), (v3, u4, u3), (v3, v4, u4), (v4, u5, u4),
        (v4, v5, u5), (v5, u6, u5), (v5, d, u6), (d, u1, u6),
        (u1, top, u6), (u2, top, u1), (u3, top, u2),
        (u4, top, u3), (u5, top, u4), (u6, top, u5),
    ]
    return embedding_from_faces(faces)


# Seeded single-green tilings with an odd green cycle, frozen from an
# exhaustive enumeration run; the odd-cycle amending checks start from these.
SEVEN_SEMI_SEED_GREENS = (
    (0, 1), (0, 6), (2, 3), (2, 7), (3, 4), (4, 9), (5, 6), (7, 9),
)  # carries the green 5-cycle 4-3-2-7-9

ANNULUS75_SEED_GREENS = (
    (0, 1), (0, 6), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6),
    (7, 8), (7, 11), (8, 9), (9, 10), (10, 11),
)  # both rims green: a 7-cycle and a 5-cycle along the annulus


def seeded_tiling(name: str):
    """The frozen odd-cycle single(green) tiling for an amending host."""
    from .tiling import G, K, Tiling, single_mode

    greens = {
        "seven-semi": SEVEN_SEMI_SEED_GREENS,
        "annulus75": ANNULUS75_SEED_GREENS,
    }[name]
    e = get(name)
    gset = {tuple(sorted(x)) for x in greens}
    cmap = {edge: (G if edge in gset else K) for edge in e.edges}
    return Tiling.make(e, single_mode(G), cmap)


CORPUS = {
    "k4": k4,
    "octahedron": octahedron,
    "icosahedron": icosahedron,
    "ico5": icosahedron_minus_vertex,
    "seven-semi": seven_semi,
    "annulus75": annulus75,
    "td55": td55_host,
    "tri5": tri5_host,
    "diamond5": diamond5_host,
    "hat": hat_host,
}

MPG_NAMES = ("k4", "octahedron", "icosahedron", "td55", "tri5", "diamond5", "hat")
SEMI_NAMES = ("ico5", "seven-semi", "annulus75")


def get(name: str) -> Embedding:
    if name not in CORPUS:
        raise KeyError(f"unknown corpus graph {name!r}; choose from {sorted(CORPUS)}")
    return CORPUS[name]()
