import itertools

import pytest

from rgbtiling import corpus
from rgbtiling.atlas import (
    AtlasError, adjacency_signature, build_atlas, canonical_word,
    dihedral_group, enumerate_boundary_classes, equal_parity_words,
    identity_group, intersect_atlases, klein4_group, label_entries,
    render_table,
)
from rgbtiling.embedding import edge_key, region_of
from rgbtiling.enumeration import enumerate_tilings
from rgbtiling.tiling import MODE_PARTIAL, MODE_RGB, R, RGB, boundary_word


def test_equal_parity_counts_against_product_sweep():
    # oracle: direct sweep over all 3^6 = 729 words
    expect = {(0, 0, 6): 0, (0, 2, 4): 0, (2, 2, 2): 0}
    total = 0
    for w in itertools.product(RGB, repeat=6):
        r, g, b = w.count("r"), w.count("g"), w.count("b")
        if r % 2 == g % 2 == b % 2:
            total += 1
            expect[tuple(sorted((r, g, b)))] += 1
    assert total == 183
    assert expect == {(0, 0, 6): 3, (0, 2, 4): 90, (2, 2, 2): 90}
    assert len(equal_parity_words(6)) == 183


def test_unique_yyy_class():
    classes = enumerate_boundary_classes(6, "klein4")
    yyy = [c for c in classes if c.signature == ("Y", "Y", "Y")]
    assert len(yyy) == 1
    assert sorted(yyy[0].canonical) == ["b", "b", "g", "g", "r", "r"]


def test_n3_forces_rainbow():
    classes = enumerate_boundary_classes(3, "identity")
    assert len(classes) == 1
    assert classes[0].counts == (1, 1, 1)


def test_orbits_partition_words():
    for sym in ("identity", "klein4", "dihedral"):
        classes = enumerate_boundary_classes(6, sym)
        seen = []
        for c in classes:
            seen.extend(c.members)
        assert sorted(seen) == sorted(equal_parity_words(6))
        assert len(set(seen)) == len(seen)


def test_canonical_word_idempotent_and_minimal():
    syms = klein4_group(6)
    for w in equal_parity_words(6)[:50]:
        cw = canonical_word(w, syms)
        assert canonical_word(cw, syms) == cw
        assert cw <= w


def test_adjacency_signature():
    assert adjacency_signature(("r", "r", "g", "g", "b", "b")) == ("Y", "Y", "Y")
    assert adjacency_signature(("r", "g", "r", "g", "b", "b")) == ("Y", "N", "N")
    assert adjacency_signature(("r", "g", "b", "r", "g", "b")) == ("N", "N", "N")
    assert adjacency_signature(("r", "r", "r", "g", "g", "b")) is None


def test_groups_are_groups():
    for g in (identity_group(6), klein4_group(6), dihedral_group(6)):
        perms = set(g)
        for a in g:
            for b in g:
                composed = tuple(a[b[i]] for i in range(6))
                assert composed in perms


def test_min_cycle_length():
    with pytest.raises(AtlasError):
        enumerate_boundary_classes(2)


def test_local_catalog_contains_both_initial_shapes():
    # the two one-abandoned-edge shapes with a monochromatic diamond, on the
    # adjacent-degree-5 fragment
    from rgbtiling.templates import adjacent_pair_55
    from rgbtiling.kempe import classify_diamond

    frag = adjacent_pair_55().fragment
    ab = edge_key(0, 1)
    omega = frag.outer_facets[0]
    classes = set()
    for t in enumerate_tilings(frag, MODE_PARTIAL, abandoned=(ab,)):
        d = classify_diamond(t, ab)
        if d.kind == "A":
            classes.add(canonical_word(boundary_word(t, omega).word, klein4_group(6)))
    assert len(classes) == 2


def test_local_catalog_has_four_red_edge_pattern():
    # wheel region: one red spoke plus three red rim edges
    ico = corpus.icosahedron()
    region = region_of(ico, {0})
    spokes = [edge_key(0, k) for k in range(1, 6)]
    found = 0
    from rgbtiling.embedding import region_fragment

    frag, relabel = region_fragment(ico, region)
    spoke_edges = [edge_key(relabel[0], relabel[k]) for k in range(1, 6)]
    for t in enumerate_tilings(frag, MODE_RGB):
        reds = sum(1 for e, c in t.colors.items() if c == R)
        red_spokes = sum(1 for e in spoke_edges if t.colors[e] == R)
        if reds == 4 and red_spokes == 1:
            found += 1
    assert found > 0


def test_build_atlas_primary_and_labels():
    ico = corpus.icosahedron()
    region = region_of(ico, {0, 1})
    entries = build_atlas(ico, region, "primary", "klein4")
    assert entries
    assert all(e.provenance == "primary" for e in entries)
    # every entry passes the equal-parity test
    for e in entries:
        counts = [e.boundary_class.count(c) for c in RGB]
        assert counts[0] % 2 == counts[1] % 2 == counts[2] % 2
    labeled = label_entries(entries, ico, region)
    names = {e.label for e in labeled}
    assert "T-alpha" in names
    assert all(e.label for e in labeled)


def test_build_atlas_four_mode_local():
    ico = corpus.icosahedron()
    region = region_of(ico, {0})
    entries = build_atlas(ico, region, "4")
    assert entries
    assert all(e.provenance == "4" for e in entries)
    assert all(e.abandoned == () for e in entries)
    assert sum(e.members for e in entries) > len(entries)


def test_build_atlas_secondary_carries_derivations():
    ico = corpus.icosahedron()
    region = region_of(ico, {0})
    entries = build_atlas(ico, region, "secondary", caps=100000)
    secondary = [e for e in entries if e.provenance == "secondary"]
    assert secondary
    for e in secondary:
        assert e.derivation
        assert e.derivation[0].startswith("abandon")


def test_build_atlas_tertiary_multi_abandoned():
    td = corpus.td55_host()
    region = region_of(td, {0, 1})
    entries = build_atlas(td, region, "tertiary")
    assert any(len(e.abandoned) >= 2 for e in entries)
    tris = [f.edges for f in td.facets() if f.kind == "triangle"]
    for e in entries:
        for tri in tris:
            assert len(set(e.abandoned) & set(tri)) <= 1


def test_build_atlas_rejects_empty_td():
    from rgbtiling.embedding import RegionError

    with pytest.raises(RegionError):
        region_of(corpus.icosahedron(), set())


def test_intersect_atlases_self():
    ico = corpus.icosahedron()
    region = region_of(ico, {0})
    entries = build_atlas(ico, region, "primary")
    matches = intersect_atlases(entries, entries)
    level2 = [m for m in matches if m.level == 2]
    assert len(level2) >= len(entries)


def test_intersect_disjoint_counts_no_match():
    from rgbtiling.atlas import AtlasEntry

    a = [AtlasEntry(("b",) * 6, (), (), (), "4")]
    b = [AtlasEntry(("b", "b", "g", "g", "r", "r"), (), (), (), "4")]
    assert intersect_atlases(a, b) == []


def test_intersection_on_colorable_host_nonempty():
    # the non-escaping catalog vs the local catalog share boundary classes
    # on a colorable host, unlike the paper's hypothetical extremum
    ico = corpus.icosahedron()
    region = region_of(ico, {0, 1})
    prim = build_atlas(ico, region, "primary", "klein4")
    four = build_atlas(ico, region, "4", "klein4")
    matches = intersect_atlases(prim, four)
    assert any(m.level >= 1 for m in matches)


def test_render_table():
    classes = enumerate_boundary_classes(6, "klein4")
    table = render_table(classes)
    assert "counts" in table
    assert "(0, 0, 6)" in table
