import pytest

from rgbtiling import corpus
from rgbtiling.embedding import (
    Diamond, EmbeddingError, GraphFormatError, RegionError, SurgeryError,
    build_embedding, edge_key, embedding_from_faces, format_graph,
    merge_surgery, parse_graph, region_fragment, region_of, validate_semi_mpg,
)

K4_FILE = """\
semimpg v1
n 4
rot 0: 1 2 3
rot 1: 0 3 2
rot 2: 0 1 3
rot 3: 0 2 1
"""


def test_parse_k4():
    e = parse_graph(K4_FILE)
    assert e.vertex_count == 4
    assert e.edge_count == 6
    assert len(e.trace_faces()) == 4
    assert all(len(f) == 3 for f in e.trace_faces())


def test_parse_icosahedron_roundtrip():
    ico = corpus.icosahedron()
    again = parse_graph(format_graph(ico))
    assert again.rotation == ico.rotation
    rep = validate_semi_mpg(again)
    assert rep.vertex_count == 12
    assert rep.edge_count == 30
    assert rep.face_count == 20
    assert rep.degree_histogram == {5: 12}


def test_parse_asymmetric_adjacency():
    bad = K4_FILE.replace("rot 1: 0 3 2", "rot 1: 3 2")
    with pytest.raises(GraphFormatError):
        parse_graph(bad)


def test_parse_header_and_syntax_errors():
    with pytest.raises(GraphFormatError):
        parse_graph("nonsense\n")
    with pytest.raises(GraphFormatError):
        parse_graph("semimpg v1\nn 3\nrot 0: 1 2\nrot 1: x 2\nrot 2: 0 1\n")
    with pytest.raises(GraphFormatError):
        parse_graph("semimpg v1\nn 2\nrot 0: 1\nrot 1: 0\n")


def test_comments_and_outer():
    text = format_graph(corpus.icosahedron_minus_vertex()) + "# trailing comment\n"
    e = parse_graph(text)
    assert len(e.outer_facets) == 1
    assert len(e.outer_facets[0]) == 5


def test_validate_k4_is_mpg():
    rep = validate_semi_mpg(corpus.k4())
    assert rep.is_mpg
    assert rep.edge_count == 3 * 4 - 6


def test_validate_ico_minus_vertex_is_5_semi():
    rep = validate_semi_mpg(corpus.icosahedron_minus_vertex())
    assert not rep.is_mpg
    assert rep.outer_gon_sizes == (5,)


def test_min_degree_5_mpgs_have_12_degree5():
    for name in corpus.MPG_NAMES:
        e = corpus.get(name)
        rep = validate_semi_mpg(e)
        if min(rep.degree_histogram) >= 5:
            assert rep.degree5_count >= 12, name


def test_face_lengths_sum_to_2e():
    for name in corpus.CORPUS:
        e = corpus.get(name)
        assert sum(len(f) for f in e.trace_faces()) == 2 * e.edge_count


def test_every_edge_on_two_facets():
    for name in corpus.CORPUS:
        e = corpus.get(name)
        assert all(len(v) == 2 for v in e.edge_facets().values())


def test_diamond_of_k4():
    e = corpus.k4()
    d = e.diamond_of(0, 1)
    assert isinstance(d, Diamond)
    assert set(d.apexes) == {2, 3}
    assert not d.is_triangle


def test_diamond_on_boundary_edge():
    e = corpus.icosahedron_minus_vertex()
    rim = e.outer_facets[0]
    d = e.diamond_of(rim[0], rim[1])
    assert d.is_triangle
    assert d.apexes[1] is None


def test_diamond_unknown_edge():
    with pytest.raises(EmbeddingError):
        corpus.octahedron().diamond_of(0, 5)


def test_diamond_pairing_consistent():
    e = corpus.icosahedron()
    assert len(e.triangles()) == 20
    for u, v in e.edges:
        d = e.diamond_of(u, v)
        x, y = d.apexes
        assert x != y
        assert e.has_edge(u, x) and e.has_edge(v, x)
        assert e.has_edge(u, y) and e.has_edge(v, y)


def test_region_of_wheel():
    ico = corpus.icosahedron()
    r = region_of(ico, {0})
    assert len(r.omega) == 5
    assert set(r.omega) == set(ico.rotation[0])
    assert r.sigma_edges & r.sigma_prime_edges == set(r.omega_edges)
    assert len(r.inner_sigma_edges()) == 5


def test_region_of_td55_hexagon():
    td = corpus.td55_host()
    r = region_of(td, {0, 1})
    assert len(r.omega) == 6
    assert set(r.omega) == {2, 3, 4, 5, 6, 7}


def test_region_rejects_bad_boundary():
    # K4: the neighbourhood of one vertex is a triangle whose vertices are
    # pairwise adjacent to everything; removing the whole triangle fails
    with pytest.raises(RegionError):
        region_of(corpus.k4(), {0, 1})
    with pytest.raises(RegionError):
        region_of(corpus.octahedron(), {0, 5})  # disconnected TD


def test_region_fragment_is_wheel():
    ico = corpus.icosahedron()
    r = region_of(ico, {0})
    frag, relabel = region_fragment(ico, r)
    assert frag.vertex_count == 6
    assert len(frag.outer_facets) == 1
    rep = validate_semi_mpg(frag)
    assert rep.outer_gon_sizes == (5,)


def test_surgery_reduces_and_validates():
    td = corpus.td55_host()
    out, relabel = merge_surgery(td, remove={0, 1}, merge=(4, 6), add_edges=[(3, 7)])
    assert out.vertex_count == td.vertex_count - 3
    assert out.is_mpg()


def test_surgery_merge_adjacent_fails():
    with pytest.raises(SurgeryError):
        merge_surgery(corpus.td55_host(), merge=(0, 1))


def test_surgery_parallel_edge_fails():
    # merging two vertices with two distinct common neighbours on the far
    # side creates a parallel edge: octahedron antipodes 0 and 5 share the
    # whole ring
    with pytest.raises(SurgeryError):
        merge_surgery(corpus.octahedron(), merge=(0, 5))


def test_surgery_existing_edge_rejected():
    with pytest.raises(SurgeryError):
        merge_surgery(corpus.k4(), add_edges=[(0, 1)])


def test_embedding_from_faces_rejects_bad_cover():
    with pytest.raises(EmbeddingError):
        embedding_from_faces([(0, 1, 2)])  # every edge needs two faces
    with pytest.raises(EmbeddingError):
        embedding_from_faces([(0, 1, 2), (0, 1, 2), (0, 1, 2)])


def test_build_embedding_rejects_loops_and_parallels():
    with pytest.raises(EmbeddingError):
        build_embedding([[0, 1], [0, 2], [0, 1]])
    with pytest.raises(EmbeddingError):
        build_embedding([[1, 1, 2], [0, 2], [0, 1]])
