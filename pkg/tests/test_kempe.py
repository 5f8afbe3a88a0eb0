import pytest

from rgbtiling import corpus
from rgbtiling.embedding import edge_key, region_of
from rgbtiling.enumeration import enumerate_tilings
from rgbtiling.kempe import (
    KempeError, chain_constraints, classify_diamond, complete_type_c,
    congruence_explore, conjugate_rings, default_permit, ecs_generalized,
    escape_coloring, find_generalized_ring, find_generalized_rings, rotate_td,
    sigma_adjust_retile, sigma_adjust_ring, state_of, states_equivalent,
)
from rgbtiling.tiling import (
    B, G, MODE_PARTIAL, MODE_RGB, R, RGB, Y, boundary_word,
    find_mono_odd_cycle, is_proper_coloring, single_mode, validate_tiling,
)


def ico_partials(spoke=(0, 1)):
    ico = corpus.icosahedron()
    return list(enumerate_tilings(ico, MODE_PARTIAL, abandoned=(edge_key(*spoke),)))


def by_kind(tilings, edge, kind):
    out = []
    for t in tilings:
        d = classify_diamond(t, edge_key(*edge))
        if d.kind == kind:
            out.append((t, d))
    return out


def test_classify_type_a():
    hits = by_kind(ico_partials(), (0, 1), "A")
    assert len(hits) == 12
    for t, d in hits:
        assert len(set(d.quad)) == 1
        quad_color = d.quad[0]
        assert set(d.chain_colors) == set(RGB) - {quad_color}


def test_classify_type_b2():
    hits = by_kind(ico_partials(), (0, 1), "B2")
    assert len(hits) == 36
    for t, d in hits:
        assert len(d.chain_colors) == 1
        assert d.chain_colors[0] not in d.quad


def test_classify_type_c_and_completion():
    hits = by_kind(ico_partials(), (0, 1), "C")
    assert len(hits) == 60
    for t, d in hits[:8]:
        assert d.completion is not None
        full = complete_type_c(t, d)
        assert full.mode == MODE_RGB
        assert validate_tiling(full).ok


def test_classify_type_b3_no_information():
    # handmade: an rgb tiling of K4 with an abandoned edge always has a
    # two-color quad; a three-color quad needs a bigger host, search one
    ico = corpus.icosahedron()
    for t in enumerate_tilings(ico, MODE_PARTIAL, abandoned=((0, 1), (7, 11))):
        d = classify_diamond(t, (0, 1))
        if d.kind == "B3":
            assert d.chain_colors == ()
            assert len(set(d.quad)) == 3
            return
    pytest.skip("no B3 instance on this host pair")


def test_classify_rejects_concrete_edge():
    t = next(enumerate_tilings(corpus.icosahedron(), MODE_RGB))
    with pytest.raises(KempeError):
        classify_diamond(t, (0, 1))


def test_chain_constraints_refutable_on_pentagon():
    # the colorable host refutes every pentagon chain: the escape direction
    ico = corpus.icosahedron()
    region = region_of(ico, {0})
    refuted = escapes = 0
    for t in ico_partials():
        d = classify_diamond(t, (0, 1))
        if d.kind == "C":
            continue
        for con in chain_constraints(t, region):
            assert not con.verified
            refuted += 1
            completed = t.with_colors({con.source_edge: con.color})
            if find_mono_odd_cycle(completed, con.color) is None:
                escapes += 1
    assert refuted > 0
    assert escapes > 0


def test_chain_constraints_verified_with_witness():
    host = corpus.tri5_host()
    region = region_of(host, {0, 1, 2})
    verified = 0
    for e in region.inner_sigma_edges():
        for t in enumerate_tilings(host, MODE_PARTIAL, abandoned=(e,)):
            for con in chain_constraints(t, region):
                if not con.verified:
                    continue
                verified += 1
                path = con.witness
                assert path[0] in con.endpoints and path[-1] in con.endpoints
                for i in range(len(path) - 1):
                    assert t.color(path[i], path[i + 1]) == con.color
                # reported outside segments avoid the topic vertices
                for x, y in con.sigma_prime_segments:
                    assert x not in region.td and y not in region.td
        if verified:
            break
    assert verified > 0


def test_type_b3_emits_no_constraint():
    ico = corpus.icosahedron()
    region = region_of(ico, {0, 1})
    for t in enumerate_tilings(ico, MODE_PARTIAL, abandoned=((0, 1), (7, 11))):
        d = classify_diamond(t, (0, 1))
        if d.kind == "B3":
            cons = [c for c in chain_constraints(t, region) if c.source_edge == (0, 1)]
            assert cons == []
            return
    pytest.skip("no B3 instance found")


def test_generalized_ring_found_and_involution():
    region = region_of(corpus.icosahedron(), {0})
    t, d = by_kind(ico_partials(), (0, 1), "A")[0]
    c = d.chain_colors[0]
    permit = default_permit(t, region, c)
    hit = None
    for exit_edge in region.omega_edges:
        ring = find_generalized_ring(t, c, exit_edge, permit)
        if ring is not None:
            hit = ring
            break
    assert hit is not None
    t2 = ecs_generalized(t, hit)
    assert validate_tiling(t2).ok
    assert ecs_generalized(t2, hit).word() == t.word()


def test_generalized_ring_crosses_abandoned_and_colored():
    # the pentagon move: some ring toggles the abandoned edge around the hub
    region = region_of(corpus.icosahedron(), {0})
    spokes = {edge_key(0, k) for k in range(1, 6)}
    moved = None
    for t in ico_partials():
        d = classify_diamond(t, (0, 1))
        if d.kind == "C":
            continue
        for c in RGB:
            permit = default_permit(t, region, c)
            for exit_edge in region.omega_edges:
                for ring in find_generalized_rings(t, c, exit_edge, permit):
                    t2 = ecs_generalized(t, ring)
                    ab = t2.abandoned
                    if len(ab) == 1 and ab[0] in spokes and ab[0] != (0, 1):
                        moved = (t, ring, t2)
                        break
                if moved:
                    break
            if moved:
                break
        if moved:
            break
    assert moved is not None
    t, ring, t2 = moved
    gen_edges = {l.edge for l, g in zip(ring.links, ring.generalized) if g}
    assert (0, 1) in gen_edges  # crossed the doubled line
    assert len(gen_edges) == 2  # and exactly one colored spoke


def test_ecs_generalized_conserves_color_plus_abandoned():
    region = region_of(corpus.icosahedron(), {0})
    t, d = by_kind(ico_partials(), (0, 1), "A")[0]
    c = d.chain_colors[0]
    permit = default_permit(t, region, c)
    for exit_edge in region.omega_edges:
        rings = find_generalized_rings(t, c, exit_edge, permit)
        for ring in rings:
            t2 = ecs_generalized(t, ring)
            before = len(t.edges_of_color(c)) + len(t.abandoned)
            after = len(t2.edges_of_color(c)) + len(t2.abandoned)
            assert before == after


def test_ecs_generalized_preserves_outside_color():
    region = region_of(corpus.icosahedron(), {0})
    t, d = by_kind(ico_partials(), (0, 1), "A")[0]
    c = d.chain_colors[0]
    permit = default_permit(t, region, c)
    for exit_edge in region.omega_edges:
        ring = find_generalized_ring(t, c, exit_edge, permit)
        if ring is None:
            continue
        t2 = ecs_generalized(t, ring)
        outside = region.sigma_prime_edges - set(region.omega_edges)
        for e in outside:
            if t.colors[e] == c:
                assert t2.colors[e] == c
        break


def test_permit_validation():
    region = region_of(corpus.icosahedron(), {0})
    t, d = by_kind(ico_partials(), (0, 1), "A")[0]
    c = d.chain_colors[0]
    wrong = {e for e in region.sigma_edges if t.colors[e] not in (c, Y)}
    with pytest.raises(KempeError):
        find_generalized_rings(t, c, region.omega_edges[0], wrong)


def test_no_ring_with_empty_permit_through_blocked_exit():
    region = region_of(corpus.icosahedron(), {0})
    t, d = by_kind(ico_partials(), (0, 1), "A")[0]
    c = d.chain_colors[0]
    for exit_edge in region.omega_edges:
        if t.colors[exit_edge] == c:
            assert find_generalized_rings(t, c, exit_edge, frozenset()) == []
            return


def test_conjugate_rings_equivalent():
    region = region_of(corpus.icosahedron(), {0})
    found = None
    for t in ico_partials():
        d = classify_diamond(t, (0, 1))
        if d.kind == "C":
            continue
        for c in RGB:
            permit = default_permit(t, region, c)
            rings = []
            for exit_edge in region.omega_edges:
                for r in find_generalized_rings(t, c, exit_edge, permit):
                    if any(l.edge == (0, 1) for l in r.links):
                        rings.append(r)
            if len(rings) >= 2 and conjugate_rings(t, region, rings):
                found = True
                break
        if found:
            break
    assert found


def test_sigma_adjust_ring_keeps_boundary():
    t5 = corpus.tri5_host()
    region = region_of(t5, {0, 1, 2})
    t = next(enumerate_tilings(t5, MODE_RGB))
    for c in RGB:
        out = sigma_adjust_ring(t, region, c)
        if out is not None:
            assert boundary_word(out, region.omega).word == boundary_word(t, region.omega).word
            for e in region.sigma_prime_edges - set(region.omega_edges):
                assert out.colors[e] == t.colors[e]
            return
    pytest.skip("no wholly-inside ring on this host")


def _red_free_boundary_tiling(host, region):
    for t in enumerate_tilings(host, MODE_RGB):
        if all(t.colors[e] != R for e in region.omega_edges):
            return t
    return None


def test_sigma_adjust_retile_tri5():
    host = corpus.tri5_host()
    region = region_of(host, {0, 1, 2})
    t = _red_free_boundary_tiling(host, region)
    assert t is not None
    red = {(0, 3), (0, 5), (2, 6), (1, 2), (1, 8)}  # two red paths inside
    out = sigma_adjust_retile(t, region, R, red)
    assert validate_tiling(out).ok
    assert boundary_word(out, region.omega).word == boundary_word(t, region.omega).word
    find_mono_odd_cycle(out, R)  # check runs; parity of the result is host-specific


def test_sigma_adjust_retile_diamond5_all_even():
    host = corpus.diamond5_host()
    region = region_of(host, {0, 1, 2, 3})
    t = _red_free_boundary_tiling(host, region)
    assert t is not None
    red = {(0, 1), (0, 4), (2, 5), (2, 7), (1, 8), (3, 9)}
    out = sigma_adjust_retile(t, region, R, red)
    assert validate_tiling(out).ok
    assert out.abandoned == ()
    assert find_mono_odd_cycle(out, R) is None  # every red cycle is even


def test_sigma_adjust_retile_hat_witness_all_even():
    # the even-cycle outcome depends on the outside skeleton; search the
    # host tilings for the witness instance and pin its existence
    host = corpus.hat_host()
    region = region_of(host, set(range(9)))
    red = {(0, 4), (0, 1), (1, 8), (2, 5), (2, 7),
           (4, 9), (5, 10), (6, 11), (7, 12), (8, 13), (3, 14)}
    witness = None
    for cand in enumerate_tilings(host, MODE_RGB):
        if any(cand.colors[e] == R for e in region.omega_edges):
            continue
        out = sigma_adjust_retile(cand, region, R, red)
        assert validate_tiling(out).ok
        if find_mono_odd_cycle(out, R) is None:
            witness = out
            break
    assert witness is not None


def test_sigma_adjust_retile_bad_assignment():
    host = corpus.tri5_host()
    region = region_of(host, {0, 1, 2})
    t = _red_free_boundary_tiling(host, region)
    with pytest.raises(KempeError):
        sigma_adjust_retile(t, region, R, {(0, 3)})  # most triangles lack a red
    with pytest.raises(KempeError):
        # boundary disagreement: claim a boundary edge red
        sigma_adjust_retile(t, region, R, {(0, 3), (0, 5), (2, 6), (1, 2), (1, 8), region.omega_edges[0]})


def test_rotate_empty_schedule():
    region = region_of(corpus.icosahedron(), {0})
    t, _ = by_kind(ico_partials(), (0, 1), "A")[0]
    res = rotate_td(t, region, ())
    assert res.outcome == "closed"
    assert len(res.states) == 1
    assert res.states[0].label == "start"


def test_rotate_type_a_runs_close_or_escape():
    region = region_of(corpus.icosahedron(), {0})
    for t, _ in by_kind(ico_partials(), (0, 1), "A"):
        res = rotate_td(t, region, ("auto",) * 5)
        assert res.outcome in ("closed", "escape")
        if res.outcome == "escape":
            assert res.coloring is not None
            assert is_proper_coloring(corpus.icosahedron(), res.coloring)


def test_rotate_type_c_escapes_immediately():
    region = region_of(corpus.icosahedron(), {0})
    t, d = by_kind(ico_partials(), (0, 1), "C")[0]
    res = rotate_td(t, region, ("auto",) * 5)
    assert res.outcome == "escape"
    assert res.coloring is not None


def test_rotate_rejects_wrong_region():
    td = corpus.td55_host()
    region = region_of(td, {0})  # pentagon? a has degree 5, fine: but tiling is not partial
    t = next(enumerate_tilings(td, MODE_RGB))
    with pytest.raises(KempeError):
        rotate_td(t, region, ("auto",))


def test_escape_coloring_verifies():
    ico = corpus.icosahedron()
    t = next(enumerate_tilings(ico, MODE_RGB))
    f = escape_coloring(t)
    assert f is not None
    assert is_proper_coloring(ico, f)


def test_congruence_explore_zero_moves():
    region = region_of(corpus.icosahedron(), {0})
    t, _ = by_kind(ico_partials(), (0, 1), "A")[0]
    g = congruence_explore(t, region, moves=())
    assert len(g.states) == 1
    assert g.components() == [{0}]


def test_congruence_explore_connects_all_positions():
    region = region_of(corpus.icosahedron(), {0})
    t, _ = by_kind(ico_partials(), (0, 1), "A")[0]
    g = congruence_explore(t, region, moves=("canal-ecs", "generalized-ecs"), max_states=500)
    assert g.complete
    comps = g.components()
    assert len(comps) == 1
    spokes = set()
    for s in g.states:
        for e in s.tiling.abandoned:
            if 0 in e:
                spokes.add(e)
    assert spokes == {edge_key(0, k) for k in range(1, 6)}


def test_states_equivalent_reflexive():
    region = region_of(corpus.icosahedron(), {0})
    t, _ = by_kind(ico_partials(), (0, 1), "A")[0]
    s = state_of(t, region)
    assert states_equivalent(s, s)
