"""Property tests over random stacked triangulations.

A stacked triangulation grows from K4 by planting a new vertex inside a
facet; the result is always an MPG, so every invariant stated for
embeddings and tilings must hold on it.
"""

from hypothesis import given, settings, strategies as st

from rgbtiling.corpus import k4
from rgbtiling.dual import ecs_canal_ring, extract_canal_system
from rgbtiling.embedding import Embedding, build_embedding, edge_key, validate_embedding
from rgbtiling.enumeration import enumerate_four_colorings, enumerate_tilings
from rgbtiling.tiling import (
    MODE_RGB, RGB, boundary_word, bounds_tiled_disk, check_grand,
    extract_four_coloring, find_mono_odd_cycle, induce_tiling,
    restrict_to_single, synonym_canonical, validate_tiling,
)


def stacked(choices: list[int]) -> Embedding:
    """Grow an MPG from K4 by stacking a vertex into a chosen facet."""
    e = k4()
    for c in choices:
        faces = [f for f in e.trace_faces()]
        face = faces[c % len(faces)]
        n = e.vertex_count
        rotation = [list(r) for r in e.rotation]
        x, y, z = face
        rotation.append([x, z, y])  # new hub sees the face corners
        for a, b in ((x, y), (y, z), (z, x)):
            i = rotation[b].index(a)
            rotation[b].insert(i + 1, n)
        e = build_embedding(rotation)
    return e


triangulations = st.builds(
    stacked, st.lists(st.integers(min_value=0, max_value=1000), max_size=5)
)


@settings(max_examples=25, deadline=None)
@given(triangulations)
def test_face_tracing_closes(e):
    validate_embedding(e)
    assert sum(len(f) for f in e.trace_faces()) == 2 * e.edge_count
    assert e.edge_count == 3 * e.vertex_count - 6


@settings(max_examples=25, deadline=None)
@given(triangulations)
def test_every_edge_two_facets_and_diamonds(e):
    for u, v in e.edges:
        d = e.diamond_of(u, v)
        assert d.apexes[0] != d.apexes[1]


@settings(max_examples=15, deadline=None)
@given(triangulations)
def test_induced_tilings_valid_and_odd_cycle_free(e):
    for f in enumerate_four_colorings(e, limit=3):
        t = induce_tiling(e, f)
        assert validate_tiling(t).ok
        for c in RGB:
            assert find_mono_odd_cycle(t, c) is None


@settings(max_examples=15, deadline=None)
@given(triangulations)
def test_extraction_round_trip(e):
    for f in enumerate_four_colorings(e, limit=2):
        t = induce_tiling(e, f)
        single = restrict_to_single(t, "r")
        if find_mono_odd_cycle(single, "r") is None:
            witness = check_grand(single)
            if witness is not None:
                g = extract_four_coloring(single, witness)
                assert all(g[u] != g[v] for u, v in e.edges)


@settings(max_examples=10, deadline=None)
@given(triangulations)
def test_canal_rings_and_ecs(e):
    try:
        t = next(enumerate_tilings(e, MODE_RGB))
    except StopIteration:
        return
    for c in RGB:
        system = extract_canal_system(e, t, c)
        assert all(l.kind == "ring" for l in system.lines)
        for ring in system.rings()[:2]:
            t2 = ecs_canal_ring(t, ring)
            assert validate_tiling(t2).ok


@settings(max_examples=10, deadline=None)
@given(triangulations)
def test_synonym_canonical_idempotent(e):
    try:
        t = next(enumerate_tilings(e, MODE_RGB))
    except StopIteration:
        return
    canon = synonym_canonical(t)
    assert synonym_canonical(canon).word() == canon.word()


@settings(max_examples=10, deadline=None)
@given(triangulations)
def test_facial_parity(e):
    try:
        t = next(enumerate_tilings(e, MODE_RGB))
    except StopIteration:
        return
    for face in e.trace_faces():
        assert boundary_word(t, face).equal_parity()
    for u, v in e.edges:
        d = e.diamond_of(u, v)
        cyc = (u, d.apexes[0], v, d.apexes[1])
        if len(set(cyc)) == 4 and all(e.has_edge(cyc[i], cyc[(i + 1) % 4]) for i in range(4)):
            if bounds_tiled_disk(e, cyc):
                assert boundary_word(t, cyc).equal_parity()
