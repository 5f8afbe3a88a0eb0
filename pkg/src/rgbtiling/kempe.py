"""Abandoned-edge machinery.

An abandoned (yellow double-line) edge stands for an edge whose re-coloring
is obstructed: the quad pattern of its diamond decides which colors admit a
single-color view, and each such color claims a Kempe chain between the edge
ends.  Generalized canal rings may cross the distinguished color and
abandoned edges at permitted places; their ECS toggles color <-> abandoned
there and swaps the two other colors on normal crossings.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .dual import DualGraph, DualLink, build_dual
from .embedding import Edge, Embedding, RegionSpec, edge_key
from .tiling import (
    B, G, K, MODE_PARTIAL, MODE_RGB, R, RGB, Y,
    BoundaryWord, Tiling, TilingError, boundary_word, check_grand,
    extract_four_coloring, find_mono_odd_cycle, other_two, restrict_to_single,
    synonym_canonical, validate_tiling,
)


class KempeError(TilingError):
    pass


# ---------------------------------------------------------------------------
# Diamond typing
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiamondType:
    edge: Edge
    quad: tuple[str, str, str, str]  # colors around u-x-v-y
    kind: str  # "A" | "B2" | "B3" | "C"
    chain_colors: tuple[str, ...]  # colors with a valid single-color view
    completion: str | None  # TypeC: the color making both triangles rainbow


def classify_diamond(t: Tiling, e: Edge) -> DiamondType:
    """Type of an abandoned edge by the colors around its diamond.

    A monochromatic quad claims the two other colors, an all-rainbow
    completion is Type C, a two-color quad with a single-view color is B2 and
    a three-color quad carries no information.  Every claimed chain color is
    post-verified: completing the edge with it must leave exactly one such
    edge in every fully concrete triangle.
    """
    e = edge_key(*e)
    if t.mode != MODE_PARTIAL or t.colors[e] != Y:
        raise KempeError(f"edge {e} is not an abandoned edge of a partial tiling")
    d = t.base.diamond_of(*e)
    if d.is_triangle:
        raise KempeError(f"edge {e} lies on an outer facet; no diamond")
    quad_edges = d.quad()
    quad = tuple(t.colors[q] for q in quad_edges)
    if any(q == Y for q in quad):
        raise KempeError("triangle with two abandoned edges")  # excluded by mode
    t1, t2 = set(quad[:2]), set(quad[2:])
    if len(set(quad)) == 1:
        kind, chains, completion = "A", tuple(sorted(other_two(quad[0]))), None
    elif len(t1) == 2 and t1 == t2:
        kind = "C"
        (completion,) = set(RGB) - t1
        chains = (completion,)
    else:
        viable = tuple(sorted(c for c in RGB if c not in t1 and c not in t2))
        if len(viable) == 1:
            kind, chains, completion = "B2", viable, None
        else:
            kind, chains, completion = "B3", (), None

    checked = tuple(c for c in chains if _single_view_ok(t, e, c))
    if len(t.abandoned) == 1 and checked != chains:
        # with a lone abandoned edge the quad analysis must agree globally
        raise KempeError(
            f"classification claims {set(chains) - set(checked)} for {e} "
            f"but the single-color view fails"
        )
    return DiamondType(e, quad, kind, checked, completion)


def _single_view_ok(t: Tiling, e: Edge, c: str) -> bool:
    """Completing e with c leaves every fully concrete triangle with one c edge.

    Triangles holding some other abandoned edge are checked one-sided (at
    most one c edge): their own completion is not decided here.
    """
    colors = dict(t.colors)
    colors[e] = c
    for f in t.base.facets():
        if f.kind != "triangle":
            continue
        cols = [colors[x] for x in f.edges]
        k = cols.count(c)
        if Y in cols:
            if k > 1:
                return False
        elif k != 1:
            return False
    return True


def complete_type_c(t: Tiling, d: DiamondType) -> Tiling:
    """Full rgb tiling from a Type C diamond's rainbow completion."""
    if d.kind != "C":
        raise KempeError("rainbow completion needs a Type C diamond")
    out = t.with_colors({d.edge: d.completion})
    if not out.abandoned:
        out = Tiling.make(out.base, MODE_RGB, dict(out.colors))
    rep = validate_tiling(out)
    if not rep:
        raise KempeError(f"Type C completion failed validation: {rep.message}")
    return out


# ---------------------------------------------------------------------------
# Kempe-chain constraints
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KempeConstraint:
    """Claimed c-connection between the ends of an abandoned edge.

    Verified constraints carry a witness path and its boundary-to-boundary
    segments outside the region; refuted ones mean the host escapes (the
    completion yields no odd cycle through the edge).
    """

    color: str
    source_edge: Edge
    endpoints: tuple[int, int]
    verified: bool
    witness: tuple[int, ...] | None = None
    sigma_prime_segments: tuple[tuple[int, int], ...] = ()

    def summary(self) -> tuple:
        return (self.color, self.source_edge, self.verified)


def _color_path(t: Tiling, c: str, src: int, dst: int, skip: Edge) -> tuple[int, ...] | None:
    adj: dict[int, list[int]] = {}
    for (u, v), col in t.colors.items():
        if col == c and edge_key(u, v) != skip:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
    if src not in adj:
        return None
    prev = {src: None}
    q = deque([src])
    while q:
        x = q.popleft()
        if x == dst:
            path = [x]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            return tuple(reversed(path))
        for y in sorted(adj.get(x, ())):
            if y not in prev:
                prev[y] = x
                q.append(y)
    return None


def chain_constraints(t: Tiling, region: RegionSpec) -> list[KempeConstraint]:
    """Constraints from every Type A / Type B2 diamond inside the region.

    The two chain colors of a Type A diamond are alternatives for the same
    source edge.  A constraint is verified by a color path between the edge
    ends avoiding the edge itself; the path's maximal runs outside the region
    are reported as boundary-pair segments.
    """
    out = []
    for e in t.abandoned:
        if e not in region.sigma_edges:
            continue
        d = classify_diamond(t, e)
        for c in d.chain_colors:
            if d.kind == "C":
                continue
            path = _color_path(t, c, e[0], e[1], e)
            segs = ()
            if path is not None:
                segs = _sigma_prime_segments(path, region)
            out.append(
                KempeConstraint(c, e, e, path is not None, path, segs)
            )
    return out


def _sigma_prime_segments(path: tuple[int, ...], region: RegionSpec) -> tuple[tuple[int, int], ...]:
    segs = []
    start = None
    for i in range(len(path) - 1):
        e = edge_key(path[i], path[i + 1])
        outside = e in region.sigma_prime_edges and e not in region.sigma_edges
        if outside and start is None:
            start = path[i]
        if not outside and start is not None:
            segs.append(tuple(sorted((start, path[i]))))
            start = None
    if start is not None:
        segs.append(tuple(sorted((start, path[-1]))))
    return tuple(segs)


def constraint_summary(constraints) -> frozenset:
    return frozenset(c.summary() for c in constraints)


def escape_coloring(t: Tiling) -> dict[int, int] | None:
    """Try to turn a full rgb tiling into a verified proper 4-coloring."""
    if t.mode != MODE_RGB:
        return None
    for c in RGB:
        view = restrict_to_single(t, c)
        if find_mono_odd_cycle(view, c) is not None:
            continue
        witness = check_grand(view)
        if witness is None:
            continue
        return extract_four_coloring(view, witness)
    return None


# ---------------------------------------------------------------------------
# Generalized canal rings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneralizedRing:
    """Closed dual walk for color c: normal crossings use the two other
    colors and alternate; generalized crossings use c or abandoned edges at
    permitted places only."""

    color: str
    links: tuple[DualLink, ...]  # in walk order
    generalized: tuple[bool, ...]

    @property
    def crossed_edges(self) -> tuple[Edge, ...]:
        return tuple(l.edge for l in self.links)

    def key(self) -> frozenset:
        return frozenset(self.links)


def _ecs_generalized_updates(t: Tiling, ring: GeneralizedRing) -> dict[Edge, str]:
    c = ring.color
    c1, c2 = other_two(c)
    swap = {c1: c2, c2: c1, c: Y, Y: c}
    updates = {}
    for l in ring.links:
        col = t.colors[l.edge]
        updates[l.edge] = swap[col]
    return updates


def ecs_generalized(t: Tiling, ring: GeneralizedRing) -> Tiling:
    """Apply generalized ECS; the result must satisfy partial-mode invariants.

    A failure here signals a ring the search should never have produced.
    Never touches a c-colored edge crossed normally, so the c subgraph away
    from the permitted edges is preserved.
    """
    for l, gen in zip(ring.links, ring.generalized):
        col = t.colors[l.edge]
        if gen and col not in (ring.color, Y):
            raise KempeError(f"stale ring: generalized crossing at {l.edge} sees {col}")
        if not gen and col in (ring.color, Y):
            raise KempeError(f"stale ring: normal crossing at {l.edge} sees {col}")
    updates = _ecs_generalized_updates(t, ring)
    colors = dict(t.colors)
    colors.update(updates)
    mode = MODE_PARTIAL if any(col == Y for col in colors.values()) else t.mode
    out = Tiling.make(t.base, mode, colors)
    rep = validate_tiling(out)
    if not rep:
        raise KempeError(f"generalized ECS produced an invalid tiling: {rep.message}")
    return out


def find_generalized_rings(
    t: Tiling,
    c: str,
    exit_edge: Edge,
    permit: frozenset[Edge] | set[Edge],
    scope: frozenset[Edge] | None = None,
    max_links: int = 80,
    limit: int | None = None,
) -> list[GeneralizedRing]:
    """All closed walks through ``exit_edge`` whose ECS yields a valid tiling.

    The walk crosses each link at most once; at a triangle entered by a
    non-c link the normal continuation is the other non-c color, and c or
    abandoned links may be crossed where permitted.  Candidate walks are
    filtered by actually applying the switch, so every returned ring is safe
    for :func:`ecs_generalized`.  Deterministic order; dedup up to rotation
    and reversal.
    """
    if t.mode not in (MODE_PARTIAL, MODE_RGB):
        raise KempeError("generalized rings need a partial or rgb tiling")
    exit_edge = edge_key(*exit_edge)
    permit = frozenset(edge_key(*e) for e in permit)
    bad = [e for e in permit if t.colors[e] not in (c, Y)]
    if bad:
        raise KempeError(f"permit contains edges not {c}-colored or abandoned: {sorted(bad)[:4]}")
    c1, c2 = other_two(c)
    dual = build_dual(t.base, t)
    links_at: dict = {}
    for l in dual.links:
        links_at.setdefault(l.a, []).append(l)
        links_at.setdefault(l.b, []).append(l)

    start_links = dual.link_for_edge(exit_edge)
    if not start_links:
        raise KempeError(f"exit edge {exit_edge} not in the graph")
    (start_link,) = start_links
    if t.colors[exit_edge] not in (c1, c2):
        return []  # the exit must be crossed normally

    def is_generalized(l: DualLink) -> bool:
        return t.colors[l.edge] in (c, Y)

    def may_cross(l: DualLink) -> bool:
        if scope is not None and l.edge not in scope:
            return False
        if is_generalized(l):
            return l.edge in permit
        return True

    rings: dict[frozenset, GeneralizedRing] = {}
    home = start_link.a if start_link.a[0] == "tri" else start_link.b

    def exits_from(node, in_link: DualLink) -> list[DualLink]:
        if node[0] != "tri":
            return []  # pseudo nodes end every walk
        out = []
        in_col = t.colors[in_link.edge]
        for l in sorted(links_at[node], key=lambda x: x.edge):
            if l is in_link:
                continue
            col = t.colors[l.edge]
            if is_generalized(l):
                if may_cross(l):
                    out.append(l)
            elif is_generalized(in_link):
                out.append(l)  # a fresh normal segment may start with either color
            else:
                if col != in_col:
                    out.append(l)  # normal alternation
        return out

    walk: list[DualLink] = []
    gen_flags: list[bool] = []
    used: set[DualLink] = set()

    def rec(node) -> bool:
        # a walk reaching home must close there: home has no spare link pair
        if node == home:
            if start_link in exits_from(node, walk[-1]):
                candidate = GeneralizedRing(c, tuple(walk), tuple(gen_flags))
                key = candidate.key()
                if key not in rings and _ring_is_safe(t, candidate):
                    rings[key] = candidate
                    if limit is not None and len(rings) >= limit:
                        return True
            return False
        if len(walk) >= max_links:
            return False
        for l in exits_from(node, walk[-1]):
            if l in used:
                continue
            used.add(l)
            walk.append(l)
            gen_flags.append(is_generalized(l))
            if rec(l.other(node)):
                return True
            used.discard(l)
            walk.pop()
            gen_flags.pop()
        return False

    if may_cross(start_link):
        used.add(start_link)
        walk.append(start_link)
        gen_flags.append(False)
        rec(start_link.other(home))
    return sorted(rings.values(), key=lambda r: (len(r.links), r.crossed_edges))


def _ring_is_safe(t: Tiling, ring: GeneralizedRing) -> bool:
    try:
        colors = dict(t.colors)
        colors.update(_ecs_generalized_updates(t, ring))
        mode = MODE_PARTIAL if any(c == Y for c in colors.values()) else t.mode
        out = Tiling.make(t.base, mode, colors)
    except TilingError:
        return False
    return bool(validate_tiling(out))


def find_generalized_ring(
    t: Tiling,
    c: str,
    exit_edge: Edge,
    permit,
    scope=None,
    max_links: int = 80,
) -> GeneralizedRing | None:
    """First safe generalized ring through the exit edge, or None."""
    rings = find_generalized_rings(t, c, exit_edge, permit, scope, max_links, limit=None)
    return rings[0] if rings else None


def default_permit(t: Tiling, region: RegionSpec, c: str) -> frozenset[Edge]:
    """Abandoned edges plus c-colored region edges at TD vertices."""
    permit = set(t.abandoned)
    for e in region.sigma_edges:
        if t.colors[e] == c and (e[0] in region.td or e[1] in region.td):
            permit.add(e)
    return frozenset(permit)


def conjugate_rings(t: Tiling, region: RegionSpec, rings: list[GeneralizedRing]) -> list[tuple[int, int]]:
    """Pairs of rings whose switches land in equivalent states."""
    states = []
    for r in rings:
        t2 = ecs_generalized(t, r)
        states.append(state_of(t2, region))
    out = []
    for i in range(len(states)):
        for j in range(i + 1, len(states)):
            if states_equivalent(states[i], states[j]):
                out.append((i, j))
    return out


# ---------------------------------------------------------------------------
# States
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class State:
    tiling: Tiling
    co_omega: BoundaryWord
    constraints: frozenset
    label: str | None = None

    def key(self) -> tuple:
        return synonym_canonical(self.tiling).word() if self.tiling.mode in (
            MODE_PARTIAL, MODE_RGB) else self.tiling.word()


def state_of(t: Tiling, region: RegionSpec, label: str | None = None) -> State:
    co = boundary_word(t, region.omega)
    cons = constraint_summary(chain_constraints(t, region)) if t.mode == MODE_PARTIAL else frozenset()
    return State(t, co, cons, label)


def _word_class(word: tuple[str, ...], syms: tuple[tuple[int, ...], ...]) -> tuple[str, ...]:
    from .atlas import canonical_word  # local import to avoid a cycle

    return canonical_word(word, syms)


def states_equivalent(a: State, b: State, syms: tuple[tuple[int, ...], ...] = ()) -> bool:
    """Same boundary-word class and the same verified constraint set."""
    syms = syms or (tuple(range(len(a.co_omega.word))),)
    if _word_class(a.co_omega.word, syms) != _word_class(b.co_omega.word, syms):
        return False
    av = {x for x in a.constraints if x[2]}
    bv = {x for x in b.constraints if x[2]}
    return {(c, v) for c, _, v in av} == {(c, v) for c, _, v in bv}


# ---------------------------------------------------------------------------
# Sigma adjustments
# ---------------------------------------------------------------------------


def sigma_adjust_ring(t: Tiling, region: RegionSpec, c: str, max_links: int = 80) -> Tiling | None:
    """Method 1: switch along the first generalized ring wholly inside the region."""
    scope = frozenset(region.sigma_edges - set(region.omega_edges))
    permit = frozenset(e for e in scope if t.colors[e] in (c, Y))
    for start in sorted(scope):
        if t.colors[start] in (c, Y):
            continue
        rings = find_generalized_rings(t, c, start, permit, scope=scope, max_links=max_links, limit=1)
        if rings:
            return ecs_generalized(t, rings[0])
    return None


def sigma_adjust_retile(
    t: Tiling, region: RegionSpec, c: str, c_edges: set[Edge]
) -> Tiling:
    """Method 2: re-tile the inside, keeping the boundary word and the outside.

    ``c_edges`` must give every region triangle exactly one c edge and agree
    with the boundary colors.  The other two colors are re-completed by
    2-coloring the remaining inner edges against the fixed boundary; an edge
    whose completion clashes is abandoned and the affected triangles drop
    out of the constraint set, so the result lives on the region minus a few
    doubled lines.
    """
    c_edges = {edge_key(*e) for e in c_edges}
    omega_edges = set(region.omega_edges)
    inner = set(region.inner_sigma_edges())
    if not c_edges <= set(region.sigma_edges):
        raise KempeError("re-tiling assignment leaves the region")
    for e in omega_edges:
        if (e in c_edges) != (t.colors[e] == c):
            raise KempeError(f"assignment disagrees with the boundary at {e}")
    c1, c2 = other_two(c)
    facets = t.base.facets()
    tris = [facets[i] for i in region.inside_facets]
    for f in tris:
        if sum(1 for e in f.edges if e in c_edges) != 1:
            raise KempeError(f"triangle {f.vertices} lacks exactly one {c} edge in the assignment")

    pending = sorted(e for e in inner if e not in c_edges)
    dropped: set[Edge] = set()
    while True:  # each round either completes or abandons one more edge
        colors: dict[Edge, str | None] = {e: None for e in pending}
        conflict_edge = None
        while conflict_edge is None:
            moved = False
            for f in tris:
                if any(e in dropped for e in f.edges):
                    continue  # a doubled line frees its triangles
                slots, known = [], []
                for e in f.edges:
                    if e in c_edges:
                        continue
                    val = colors[e] if e in colors else t.colors[e]
                    (slots if val is None else known).append((e, val))
                if len(slots) == 1 and len(known) == 1:
                    colors[slots[0][0]] = c1 if known[0][1] == c2 else c2
                    moved = True
                elif not slots and len(known) == 2 and known[0][1] == known[1][1]:
                    cands = sorted(e for e, _ in known if e in inner)
                    if not cands:
                        raise KempeError(
                            f"boundary triangle {f.vertices} cannot be completed"
                        )
                    conflict_edge = cands[0]
                    break
            if conflict_edge is not None or moved:
                continue
            seeds = sorted(e for e in pending if colors[e] is None)
            if not seeds:
                break
            colors[seeds[0]] = c1
        if conflict_edge is None:
            break
        dropped.add(conflict_edge)
        pending = [e for e in pending if e != conflict_edge]

    updates: dict[Edge, str] = {e: c for e in inner & c_edges}
    for e in pending:
        updates[e] = colors[e] if colors[e] is not None else c1
    for e in dropped:
        updates[e] = Y
    out = t.with_colors(updates, mode=MODE_PARTIAL)
    rep = validate_tiling(out)
    if not rep:
        raise KempeError(f"re-tiling failed validation: {rep.message}")
    if boundary_word(out, region.omega).word != boundary_word(t, region.omega).word:
        raise KempeError("re-tiling changed the boundary word")
    for e in region.sigma_prime_edges - set(region.omega_edges):
        if out.colors[e] != t.colors[e]:
            raise KempeError("re-tiling leaked outside the region")
    return out


# ---------------------------------------------------------------------------
# Rotation around a topic
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RotationStep:
    color: str
    exit_edge: Edge | None
    ring: GeneralizedRing | None
    state: State


@dataclass(frozen=True)
class RotationResult:
    """States visited plus the terminal outcome.

    outcome: "closed" (schedule done, boundary class restored),
    "mismatch" (schedule done, class changed), "escape" (a Type C diamond or
    a ring completed the tiling; carries a verified coloring when one
    exists), or "no-ring".
    """

    steps: tuple[RotationStep, ...]
    outcome: str
    coloring: dict[int, int] | None = None
    final: Tiling | None = None

    @property
    def states(self) -> tuple[State, ...]:
        return tuple(s.state for s in self.steps)


SUPPORTED_TEMPLATES = {5: "pentagon", 6: "hexagon"}


def rotate_td(
    t: Tiling,
    region: RegionSpec,
    schedule: tuple[str, ...],
    syms: tuple[tuple[int, ...], ...] | None = None,
    max_links: int = 80,
) -> RotationResult:
    """Walk the scheduled switches around a pentagon or hexagon region.

    Each step finds a generalized ring of the scheduled color (entries may
    be "auto": first chain color that works) through a boundary exit, taking
    the first ring that keeps the abandoned set size (the rotation move),
    then one that empties it (escape), then any other.  A Type C diamond or
    a completed tiling ends the run with a verified coloring attempt; on a
    full schedule the final boundary-word class must match the initial one.
    """
    if len(region.omega) not in SUPPORTED_TEMPLATES:
        raise KempeError(f"unsupported region boundary length {len(region.omega)}")
    if t.mode != MODE_PARTIAL or not t.abandoned:
        raise KempeError("rotation starts from a partial tiling with abandoned edges")
    if syms is None:
        syms = (tuple(range(len(region.omega))),)
    initial_class = _word_class(boundary_word(t, region.omega).word, syms)
    steps: list[RotationStep] = [
        RotationStep("-", None, None, state_of(t, region, label="start"))
    ]
    cur = t
    visited_positions = {frozenset(t.abandoned)}
    last_step = len(schedule) - 1
    for step_no, sched in enumerate(schedule):
        diamonds = [classify_diamond(cur, e) for e in cur.abandoned]
        typec = [d for d in diamonds if d.kind == "C"]
        if typec:
            full = complete_type_c(cur, typec[0])
            col = escape_coloring(full) if full.mode == MODE_RGB else None
            steps.append(RotationStep("-", None, None, State(full, boundary_word(full, region.omega), frozenset(), "type-c")))
            return RotationResult(tuple(steps), "escape", col, full)
        colors = [sched] if sched != "auto" else list(RGB)
        fresh_move = stale_move = fallback = None
        for c in colors:
            permit = default_permit(cur, region, c)
            for exit_edge in region.omega_edges:
                for ring in find_generalized_rings(cur, c, exit_edge, permit, max_links=max_links):
                    nxt = ecs_generalized(cur, ring)
                    pos = frozenset(nxt.abandoned)
                    moves_on = len(nxt.abandoned) == len(cur.abandoned) and pos != frozenset(cur.abandoned)
                    # the last step is allowed (and meant) to return home
                    fresh = pos not in visited_positions or (
                        step_no == last_step and pos == frozenset(t.abandoned)
                    )
                    if moves_on and fresh and fresh_move is None:
                        fresh_move = (c, exit_edge, ring, nxt)
                    elif moves_on and stale_move is None:
                        stale_move = (c, exit_edge, ring, nxt)
                    elif fallback is None:
                        fallback = (c, exit_edge, ring, nxt)
                if fresh_move:
                    break
            if fresh_move:
                break
        choice = fresh_move or stale_move or fallback
        if choice is None:
            return RotationResult(tuple(steps), "no-ring")
        c, exit_edge, ring, nxt = choice
        visited_positions.add(frozenset(nxt.abandoned))
        if not nxt.abandoned:
            full = Tiling.make(nxt.base, MODE_RGB, dict(nxt.colors))
            col = escape_coloring(full)
            steps.append(RotationStep(c, exit_edge, ring, State(full, boundary_word(full, region.omega), frozenset(), "completed")))
            return RotationResult(tuple(steps), "escape", col, full)
        steps.append(RotationStep(c, exit_edge, ring, state_of(nxt, region)))
        cur = nxt
    final_class = _word_class(boundary_word(cur, region.omega).word, syms)
    outcome = "closed" if final_class == initial_class else "mismatch"
    return RotationResult(tuple(steps), outcome, None, cur)


# ---------------------------------------------------------------------------
# Congruence exploration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StateGraph:
    states: tuple[State, ...]
    edges: tuple[tuple[int, int, str], ...]  # (from, to, move descriptor)
    complete: bool  # False when the cap cut the search

    def components(self) -> list[set[int]]:
        adj: dict[int, set[int]] = {i: set() for i in range(len(self.states))}
        for a, b, _ in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen: set[int] = set()
        out = []
        for i in range(len(self.states)):
            if i in seen:
                continue
            comp = {i}
            todo = [i]
            while todo:
                x = todo.pop()
                for y in adj[x]:
                    if y not in comp:
                        comp.add(y)
                        todo.append(y)
            seen |= comp
            out.append(comp)
        return out


def congruence_explore(
    t0: Tiling,
    region: RegionSpec,
    moves: tuple[str, ...] = ("canal-ecs", "generalized-ecs"),
    max_states: int = 2000,
    max_links: int = 80,
) -> StateGraph:
    """BFS closure of a state under the selected switch moves.

    States are keyed by the synonym-canonical edge-color word, so two states
    differing only by a global color permutation coincide.  canal-ecs uses
    rings with no generalized crossing, generalized-ecs the default permit,
    sigma-adjust the wholly-inside rings.
    """
    idx: dict[tuple, int] = {}
    states: list[State] = []
    tilings: list[Tiling] = []
    edges: list[tuple[int, int, str]] = []
    complete = True

    def intern(t: Tiling) -> int:
        key = synonym_canonical(t).word() if t.mode in (MODE_PARTIAL, MODE_RGB) else t.word()
        if key in idx:
            return idx[key]
        idx[key] = len(states)
        label = None
        states.append(State(t, boundary_word(t, region.omega), frozenset(), label))
        tilings.append(t)
        return idx[key]

    start = intern(t0)
    frontier = deque([start])
    seen_moves: set[tuple[int, frozenset]] = set()
    while frontier:
        i = frontier.popleft()
        cur = tilings[i]
        if len(states) >= max_states:
            complete = False
            break
        for c in RGB:
            permits = []
            if "canal-ecs" in moves:
                permits.append(("canal", frozenset()))
            if "generalized-ecs" in moves:
                permits.append(("gring", default_permit(cur, region, c)))
            for tag, permit in permits:
                for exit_edge in region.omega_edges:
                    try:
                        rings = find_generalized_rings(cur, c, exit_edge, permit, max_links=max_links)
                    except KempeError:
                        continue
                    for ring in rings:
                        mk = (i, ring.key())
                        if mk in seen_moves:
                            continue
                        seen_moves.add(mk)
                        nxt = ecs_generalized(cur, ring)
                        if nxt.mode == MODE_PARTIAL and not nxt.abandoned:
                            nxt = Tiling.make(nxt.base, MODE_RGB, dict(nxt.colors))
                        was_new = len(states)
                        j = intern(nxt)
                        edges.append((i, j, f"{tag} {c} via {exit_edge}"))
                        if j == was_new and len(states) <= max_states:
                            frontier.append(j)
        if "sigma-adjust" in moves and cur.mode == MODE_PARTIAL:
            for c in RGB:
                nxt = sigma_adjust_ring(cur, region, c, max_links=max_links)
                if nxt is not None:
                    was_new = len(states)
                    j = intern(nxt)
                    edges.append((i, j, f"sigma-ring {c}"))
                    if j == was_new:
                        frontier.append(j)
    return StateGraph(tuple(states), tuple(edges), complete)
