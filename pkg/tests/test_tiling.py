import pytest

from rgbtiling import corpus
from rgbtiling.embedding import edge_key
from rgbtiling.enumeration import (
    enumerate_four_colorings, enumerate_tilings,
)
from rgbtiling.tiling import (
    B, G, K, MODE_PARTIAL, MODE_RGB, R, RGB, Y,
    OddConflictCycle, Tiling, TilingError, boundary_word, bounds_tiled_disk,
    check_grand, complete_to_rgb, extract_four_coloring, find_mono_odd_cycle,
    induce_tiling, is_proper_coloring, restrict_to_single, single_mode,
    synonym_canonical, synonym_orbit, validate_tiling,
)


def k4_single(matching):
    e = corpus.k4()
    cmap = {edge: (G if edge in matching else K) for edge in e.edges}
    return Tiling.make(e, single_mode(G), cmap)


def test_matching_is_valid_single():
    t = k4_single({(0, 1), (2, 3)})
    assert validate_tiling(t).ok


def test_single_green_edge_invalid():
    t = k4_single({(0, 1)})
    rep = validate_tiling(t)
    assert not rep.ok
    assert rep.violating_facet is not None


def test_enumerated_rgb_tilings_are_valid():
    for t in enumerate_tilings(corpus.octahedron(), MODE_RGB):
        assert validate_tiling(t).ok


def test_partial_mode_rules():
    e = corpus.k4()
    base = next(enumerate_tilings(e, MODE_RGB))
    t = base.with_colors({(0, 1): Y}, mode=MODE_PARTIAL)
    assert validate_tiling(t).ok
    # two abandoned edges sharing a triangle are rejected
    t2 = base.with_colors({(0, 1): Y, (0, 2): Y}, mode=MODE_PARTIAL)
    assert not validate_tiling(t2).ok


def test_mono_odd_cycle_absent_in_matching():
    assert find_mono_odd_cycle(k4_single({(0, 1), (2, 3)}), G) is None


def test_mono_odd_cycle_found_in_seed():
    t = corpus.seeded_tiling("seven-semi")
    cyc = find_mono_odd_cycle(t, G)
    assert cyc is not None
    assert len(cyc) == 5
    assert len(set(cyc)) == 5
    for i in range(5):
        assert t.color(cyc[i], cyc[(i + 1) % 5]) == G


def test_induced_tilings_have_no_odd_cycles():
    for name in ("k4", "octahedron", "icosahedron"):
        e = corpus.get(name)
        for f in enumerate_four_colorings(e, limit=30):
            t = induce_tiling(e, f)
            for c in RGB:
                assert find_mono_odd_cycle(t, c) is None


def test_check_grand_k4():
    t = k4_single({(0, 1), (2, 3)})
    witness = check_grand(t)
    assert witness == (frozenset({0, 1}), frozenset({2, 3}))


def test_check_grand_odd_black_cycle():
    # all-rim-green tiling of the annulus: grand fails after one bad switch?
    # direct case: the 7-gon disk's first odd-cycle seed is grand, but a
    # tiling with an odd black cycle cannot be:
    e = corpus.k4()
    cmap = {edge: K for edge in e.edges}
    cmap[(0, 1)] = G
    t = Tiling.make(e, single_mode(G), cmap)  # invalid as tiling, black K3 remains
    assert check_grand(t) is None


def test_complete_to_rgb_k4():
    t = k4_single({(0, 1), (2, 3)})
    full = complete_to_rgb(t)
    assert validate_tiling(full).ok
    assert full.edges_of_color(G) == ((0, 1), (2, 3))


def test_complete_restriction_round_trip():
    for t in enumerate_tilings(corpus.icosahedron(), MODE_RGB, limit=10):
        single = restrict_to_single(t, R)
        full = complete_to_rgb(single)
        assert validate_tiling(full).ok
        assert full.edges_of_color(R) == t.edges_of_color(R)


def test_complete_odd_conflict_cycle():
    # frozen from the enumeration sweep: the first single(g) tiling of the
    # icosahedron-minus-vertex has an odd black conflict cycle
    e = corpus.icosahedron_minus_vertex()
    t = next(enumerate_tilings(e, single_mode(G)))
    with pytest.raises(OddConflictCycle) as exc:
        complete_to_rgb(t)
    assert len(exc.value.cycle) % 2 == 1
    assert len(exc.value.cycle) == 5


def test_extract_k4_uses_all_colors():
    t = k4_single({(0, 1), (2, 3)})
    f = extract_four_coloring(t)
    assert sorted(f.values()) == [1, 2, 3, 4]
    assert is_proper_coloring(corpus.k4(), f)


def test_extract_all_ico_grand_tilings():
    ico = corpus.icosahedron()
    n = 0
    for t in enumerate_tilings(ico, single_mode(R)):
        if find_mono_odd_cycle(t, R) is not None:
            continue
        witness = check_grand(t)
        assert witness is not None  # every odd-cycle-free ico tiling is grand
        f = extract_four_coloring(t, witness)
        assert is_proper_coloring(ico, f)
        n += 1
    assert n == 30


def test_extract_rejects_odd_cycle():
    t = corpus.seeded_tiling("seven-semi")
    with pytest.raises(TilingError):
        extract_four_coloring(t)


def test_induce_k4_pair_classes():
    e = corpus.k4()
    f = {0: 1, 1: 2, 2: 3, 3: 4}
    t = induce_tiling(e, f)
    assert t.color(0, 1) == R and t.color(2, 3) == R
    assert t.color(0, 2) == G and t.color(1, 3) == G
    assert t.color(0, 3) == B and t.color(1, 2) == B


def test_induce_k4_hits_each_tiling_four_times():
    e = corpus.k4()
    hits = {}
    for f in enumerate_four_colorings(e):
        t = induce_tiling(e, f)
        hits[t.word()] = hits.get(t.word(), 0) + 1
    assert len(hits) == 6
    assert set(hits.values()) == {4}


def test_induce_rejects_improper():
    e = corpus.k4()
    with pytest.raises(TilingError):
        induce_tiling(e, {0: 1, 1: 1, 2: 3, 3: 4})


def test_synonym_orbit_and_canonical():
    t = next(enumerate_tilings(corpus.octahedron(), MODE_RGB))
    orbit = synonym_orbit(t)
    assert len(orbit) == 6
    canon = synonym_canonical(t)
    assert synonym_canonical(canon).word() == canon.word()
    for s in orbit:
        assert synonym_canonical(s).word() == canon.word()


def test_k4_tilings_one_synonym_class():
    words = {synonym_canonical(t).word() for t in enumerate_tilings(corpus.k4(), MODE_RGB)}
    assert len(words) == 1


def test_boundary_word_triangle():
    t = next(enumerate_tilings(corpus.k4(), MODE_RGB))
    face = corpus.k4().trace_faces()[0]
    w = boundary_word(t, face)
    assert sorted(w.counts) == [1, 1, 1]
    assert w.equal_parity()


def test_boundary_word_rejects_abandoned():
    e = corpus.k4()
    base = next(enumerate_tilings(e, MODE_RGB))
    t = base.with_colors({(0, 1): Y}, mode=MODE_PARTIAL)
    with pytest.raises(TilingError):
        boundary_word(t, (0, 1, 2))


def test_diamond_quads_have_equal_parity():
    for name in ("k4", "octahedron", "icosahedron"):
        e = corpus.get(name)
        for t in enumerate_tilings(e, MODE_RGB, limit=6):
            for u, v in e.edges:
                d = e.diamond_of(u, v)
                x, y = d.apexes
                cyc = (u, x, v, y)
                if bounds_tiled_disk(e, cyc):
                    assert boundary_word(t, cyc).equal_parity()


def test_bounds_tiled_disk():
    ico5 = corpus.icosahedron_minus_vertex()
    # the rim bounds the triangulated side; the other side is the hole
    assert bounds_tiled_disk(ico5, ico5.outer_facets[0])
    # on the annulus the two rims bound no tiled disk (each side has a hole)
    ann = corpus.annulus75()
    assert not bounds_tiled_disk(ann, ann.outer_facets[0])
    assert not bounds_tiled_disk(ann, ann.outer_facets[1])
