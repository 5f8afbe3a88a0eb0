"""The acceptance checks: every stated invariant at desk scale.

Each check returns counts plus the first counterexample (graph and tiling
file text) on failure; the runner prints one pass/fail line per check.
Check budgets are generous for the shipped corpus; everything here is
deterministic.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import corpus
from .dual import ecs_canal_ring, extract_canal_system, matching_is_noncrossing
from .embedding import Embedding, edge_key, format_graph, merge_surgery, region_of
from .enumeration import (
    count_four_colorings, enumerate_four_colorings, enumerate_tilings,
)
from .export import format_tiling
from .kempe import classify_diamond, rotate_td
from .routes import _RouteSpace, _search, ecs_diamond_route, orientation_sets, search_route_rings
from .tiling import (
    G, MODE_PARTIAL, MODE_RGB, R, RGB, Tiling, boundary_word, bounds_tiled_disk,
    check_grand, extract_four_coloring, find_mono_odd_cycle, has_any_mono_odd_cycle,
    restrict_to_single, single_mode, validate_tiling,
)


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skip"
    counts: dict
    elapsed: float
    detail: str = ""
    counterexample: dict | None = None  # {"graph": text, "tiling": text}

    def line(self) -> str:
        extra = f"  {self.detail}" if self.detail else ""
        return f"[{self.status.upper():4s}] {self.name}  {self.counts}{extra}"


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return any(c.status == "fail" for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "failed": self.failed,
            "checks": [
                {
                    "name": c.name,
                    "status": c.status,
                    "counts": c.counts,
                    "elapsed_s": round(c.elapsed, 3),
                    "detail": c.detail,
                }
                for c in self.checks
            ],
        }


def _counterexample(e: Embedding, t: Tiling | None) -> dict:
    out = {"graph": format_graph(e)}
    if t is not None:
        out["tiling"] = format_tiling(t)
    return out


# ---------------------------------------------------------------------------
# Individual checks
# ---------------------------------------------------------------------------


def check_correspondence() -> CheckResult:
    """#4-colorings = 4 x #(odd-cycle-free rgb tilings) on the three solids."""
    t0 = time.time()
    counts = {}
    for name in ("k4", "octahedron", "icosahedron"):
        e = corpus.get(name)
        colorings = count_four_colorings(e)
        tilings = [t for t in enumerate_tilings(e, MODE_RGB)]
        clean = [t for t in tilings if not has_any_mono_odd_cycle(t)]
        counts[name] = {
            "colorings": colorings,
            "tilings": len(tilings),
            "odd_cycle_free": len(clean),
        }
        if colorings != 4 * len(clean):
            return CheckResult(
                "coloring-tiling-correspondence", "fail", counts, time.time() - t0,
                f"{name}: {colorings} != 4*{len(clean)}",
                _counterexample(e, None),
            )
    if counts["k4"] != {"colorings": 24, "tilings": 6, "odd_cycle_free": 6}:
        return CheckResult(
            "coloring-tiling-correspondence", "fail", counts, time.time() - t0,
            "K4 must give 24 colorings and 6 odd-cycle-free tilings",
        )
    return CheckResult("coloring-tiling-correspondence", "pass", counts, time.time() - t0)


def check_extraction() -> CheckResult:
    """Every odd-cycle-free grand single-color tiling yields a proper coloring."""
    t0 = time.time()
    counts = {"tilings": 0, "extracted": 0, "odd_cycle": 0, "not_grand": 0}
    for name in corpus.CORPUS:
        e = corpus.get(name)
        for c in RGB:
            for t in enumerate_tilings(e, single_mode(c)):
                counts["tilings"] += 1
                if find_mono_odd_cycle(t, c) is not None:
                    counts["odd_cycle"] += 1
                    continue
                witness = check_grand(t)
                if witness is None:
                    counts["not_grand"] += 1
                    continue
                try:
                    extract_four_coloring(t, witness)
                except Exception as exc:
                    return CheckResult(
                        "extraction-soundness", "fail", counts, time.time() - t0,
                        f"{name}: {exc}", _counterexample(e, t),
                    )
                counts["extracted"] += 1
    return CheckResult("extraction-soundness", "pass", counts, time.time() - t0)


def enumerate_cycles(e: Embedding, max_len: int) -> list[tuple[int, ...]]:
    """All simple cycles up to max_len, one orientation per cycle."""
    out = []
    adj = {v: sorted(e.rotation[v]) for v in range(e.vertex_count)}

    def dfs(start, path, seen):
        last = path[-1]
        for u in adj[last]:
            if u == start and len(path) >= 3:
                if path[1] < path[-1]:
                    out.append(tuple(path))
            elif u > start and u not in seen and len(path) < max_len:
                seen.add(u)
                path.append(u)
                dfs(start, path, seen)
                path.pop()
                seen.discard(u)

    for start in range(e.vertex_count):
        dfs(start, [start], {start})
    return out


def check_parity(max_len: int = 8) -> CheckResult:
    """Equal color parity on every cycle bounding a tiled disk; hexagon triples."""
    t0 = time.time()
    allowed_hex = {(0, 0, 6), (0, 2, 4), (2, 2, 2)}
    counts = {"graphs": 0, "cycles": 0, "words": 0}
    for name in corpus.CORPUS:
        e = corpus.get(name)
        cycles = [c for c in enumerate_cycles(e, max_len) if bounds_tiled_disk(e, c)]
        counts["graphs"] += 1
        counts["cycles"] += len(cycles)
        for t in enumerate_tilings(e, MODE_RGB):
            for cyc in cycles:
                w = boundary_word(t, cyc)
                counts["words"] += 1
                if not w.equal_parity():
                    return CheckResult(
                        "cycle-parity", "fail", counts, time.time() - t0,
                        f"{name}: cycle {cyc} word {w.word}", _counterexample(e, t),
                    )
                if len(cyc) == 6 and w.sorted_counts not in allowed_hex:
                    return CheckResult(
                        "cycle-parity", "fail", counts, time.time() - t0,
                        f"{name}: hexagon {cyc} counts {w.sorted_counts}",
                        _counterexample(e, t),
                    )
    return CheckResult("cycle-parity", "pass", counts, time.time() - t0)


def check_canal_lemma() -> CheckResult:
    """Rings on MPGs; non-crossing entrance/exit matching on one-hole hosts."""
    t0 = time.time()
    counts = {"ring_systems": 0, "matchings": 0}
    for name in corpus.MPG_NAMES:
        e = corpus.get(name)
        for t in enumerate_tilings(e, MODE_RGB):
            for c in RGB:
                system = extract_canal_system(e, t, c)
                counts["ring_systems"] += 1
                if any(l.kind != "ring" for l in system.lines):
                    return CheckResult(
                        "canal-lemma", "fail", counts, time.time() - t0,
                        f"{name}: open canal line on an MPG", _counterexample(e, t),
                    )
    for name in ("ico5", "seven-semi"):
        e = corpus.get(name)
        for t in enumerate_tilings(e, MODE_RGB):
            for c in RGB:
                system = extract_canal_system(e, t, c)
                counts["matchings"] += 1
                if not matching_is_noncrossing(e, system.boundary_matching):
                    return CheckResult(
                        "canal-lemma", "fail", counts, time.time() - t0,
                        f"{name}: crossing matching", _counterexample(e, t),
                    )
    return CheckResult("canal-lemma", "pass", counts, time.time() - t0)


def check_ecs_involution(tiling_cap: int = 12, ring_cap: int = 8) -> CheckResult:
    """ECS preserves validity and squares to the identity, for all ring kinds."""
    from .kempe import default_permit, ecs_generalized, find_generalized_rings

    t0 = time.time()
    counts = {"canal": 0, "route": 0, "generalized": 0}
    for name in corpus.CORPUS:
        e = corpus.get(name)
        for t in list(enumerate_tilings(e, MODE_RGB, limit=tiling_cap)):
            for c in RGB:
                system = extract_canal_system(e, t, c)
                for ring in system.rings()[:ring_cap]:
                    t2 = ecs_canal_ring(t, ring)
                    if not validate_tiling(t2):
                        return CheckResult(
                            "ecs-involution", "fail", counts, time.time() - t0,
                            f"{name}: canal ECS broke validity", _counterexample(e, t),
                        )
                    sys2 = extract_canal_system(e, t2, c)
                    back = [
                        l for l in sys2.rings()
                        if sorted(l.crossed_edges) == sorted(ring.crossed_edges)
                    ]
                    t3 = ecs_canal_ring(t2, back[0])
                    if t3.word() != t.word():
                        return CheckResult(
                            "ecs-involution", "fail", counts, time.time() - t0,
                            f"{name}: canal ECS not an involution", _counterexample(e, t),
                        )
                    counts["canal"] += 1
        for t in list(enumerate_tilings(e, single_mode(G), limit=tiling_cap)):
            for ring in search_route_rings(t, G, limit=ring_cap):
                t2 = ecs_diamond_route(t, ring)
                t3 = ecs_diamond_route(t2, ring)
                if t3.word() != t.word() or not validate_tiling(t2):
                    return CheckResult(
                        "ecs-involution", "fail", counts, time.time() - t0,
                        f"{name}: route ECS failed", _counterexample(e, t),
                    )
                counts["route"] += 1
    ico = corpus.get("icosahedron")
    region = region_of(ico, {0})
    spoke = edge_key(0, 1)
    for t in list(enumerate_tilings(ico, MODE_PARTIAL, abandoned=(spoke,), limit=tiling_cap)):
        for c in RGB:
            permit = default_permit(t, region, c)
            for exit_edge in region.omega_edges:
                for ring in find_generalized_rings(t, c, exit_edge, permit)[:ring_cap]:
                    t2 = ecs_generalized(t, ring)
                    t3 = ecs_generalized(t2, ring)
                    if t3.word() != t.word() or not validate_tiling(t2):
                        return CheckResult(
                            "ecs-involution", "fail", counts, time.time() - t0,
                            f"generalized ECS failed at {exit_edge}", _counterexample(ico, t),
                        )
                    counts["generalized"] += 1
    return CheckResult("ecs-involution", "pass", counts, time.time() - t0)


def _open_routes(t: Tiling, c: str):
    space = _RouteSpace(t, c)
    for e in t.edges_of_color(c):
        sides = space.tri_sides(e)
        if len(sides) != 1:
            continue
        tri = sides[0]
        apex = [v for v in space.facets[tri].vertices if v not in e][0]
        r = _search(space, e, apex, "outer", 40)
        if r is not None:
            yield r


def check_amending() -> CheckResult:
    """The seeded odd cycles die under route ECS; the annulus needs two steps."""
    t0 = time.time()
    counts = {}
    t = corpus.seeded_tiling("seven-semi")
    cyc = find_mono_odd_cycle(t, G)
    if cyc is None or len(cyc) != 5:
        return CheckResult(
            "odd-cycle-amending", "fail", counts, time.time() - t0,
            "seeded 7-gon tiling lost its green 5-cycle",
        )
    fixes = 0
    for r in search_route_rings(t, G) + list(_open_routes(t, G)):
        try:
            t2 = ecs_diamond_route(t, r)
        except Exception:
            continue
        if find_mono_odd_cycle(t2, G) is None and check_grand(t2) is not None:
            fixes += 1
    counts["seven_semi_fixes"] = fixes
    if fixes == 0:
        return CheckResult(
            "odd-cycle-amending", "fail", counts, time.time() - t0,
            "no single route ECS amends the seeded 5-cycle",
            _counterexample(t.base, t),
        )
    t = corpus.seeded_tiling("annulus75")
    two_step = 0
    for r1 in search_route_rings(t, G) + list(_open_routes(t, G)):
        try:
            t1 = ecs_diamond_route(t, r1)
        except Exception:
            continue
        if check_grand(t1) is not None:
            continue  # the middle state must fail grandness
        for r2 in search_route_rings(t1, G) + list(_open_routes(t1, G)):
            try:
                t2 = ecs_diamond_route(t1, r2)
            except Exception:
                continue
            if check_grand(t2) is not None and find_mono_odd_cycle(t2, G) is None:
                two_step += 1
                break
        if two_step:
            break
    counts["annulus_two_step"] = two_step
    status = "pass" if two_step else "fail"
    return CheckResult(
        "odd-cycle-amending", status, counts, time.time() - t0,
        "" if two_step else "no two-step amending with a non-grand middle state",
    )


def check_orientation(max_len: int = 40) -> CheckResult:
    """BiT/NonT/UniT partition the triangles; the initial triangle is an out."""
    t0 = time.time()
    counts = {"instances": 0}
    for name in corpus.CORPUS:
        e = corpus.get(name)
        t = next(enumerate_tilings(e, single_mode(G)))
        for edge in t.edges_of_color(G):
            d = e.diamond_of(*edge)
            apexes = [a for a in d.apexes if a is not None]
            for apex in apexes:
                o = orientation_sets(t, (edge, apex), max_len=max_len)
                counts["instances"] += 1
                facets = e.facets()
                init_tri = next(
                    i for i, f in enumerate(facets)
                    if f.kind == "triangle" and apex in f.vertices and set(edge) <= set(f.vertices)
                )
                if not o.partition_ok(e) or init_tri not in o.out_tris:
                    return CheckResult(
                        "orientation-partition", "fail", counts, time.time() - t0,
                        f"{name}: initiator {edge},{apex}", _counterexample(e, t),
                    )
    return CheckResult("orientation-partition", "pass", counts, time.time() - t0)


def check_rotation() -> CheckResult:
    """Every pentagon run on the icosahedron closes or escapes with a coloring."""
    t0 = time.time()
    ico = corpus.get("icosahedron")
    region = region_of(ico, {0})
    spoke = edge_key(0, 1)
    counts = {"runs": 0, "closed": 0, "escapes": 0}
    for t in enumerate_tilings(ico, MODE_PARTIAL, abandoned=(spoke,)):
        d = classify_diamond(t, spoke)
        if d.kind != "A":
            continue
        res = rotate_td(t, region, ("auto",) * 5)
        counts["runs"] += 1
        if res.outcome == "closed":
            counts["closed"] += 1
        elif res.outcome == "escape" and res.coloring is not None:
            counts["escapes"] += 1
        else:
            return CheckResult(
                "rotation-closure-escape", "fail", counts, time.time() - t0,
                f"outcome {res.outcome}, coloring {res.coloring is not None}",
                _counterexample(ico, t),
            )
    if counts["runs"] == 0:
        return CheckResult(
            "rotation-closure-escape", "fail", counts, time.time() - t0,
            "no Type A starting tilings found",
        )
    return CheckResult("rotation-closure-escape", "pass", counts, time.time() - t0)


def check_atlas() -> CheckResult:
    """Raw equal-parity counts for hexagons and the unique all-adjacent class."""
    from .atlas import adjacency_signature, enumerate_boundary_classes, equal_parity_words

    t0 = time.time()
    words = equal_parity_words(6)
    by_counts = {}
    for w in words:
        key = tuple(sorted((w.count("r"), w.count("g"), w.count("b"))))
        by_counts[key] = by_counts.get(key, 0) + 1
    counts = {"by_counts": {str(k): v for k, v in sorted(by_counts.items())}}
    ok = by_counts == {(0, 0, 6): 3, (0, 2, 4): 90, (2, 2, 2): 90}
    classes = enumerate_boundary_classes(6, "klein4")
    yyy = [c for c in classes if c.signature == ("Y", "Y", "Y")]
    counts["classes_klein4"] = len(classes)
    counts["yyy_classes"] = len(yyy)
    ok = ok and len(yyy) == 1
    return CheckResult(
        "atlas-counts", "pass" if ok else "fail", counts, time.time() - t0,
        "" if ok else "hexagon word counts or the (Y,Y,Y) class are off",
    )


def check_surgery() -> CheckResult:
    """The remove/merge/chord surgery yields a 4-colorable MPG, three smaller."""
    t0 = time.time()
    td = corpus.get("td55")
    a, b, d, v1, v2, c, v4, v5 = range(8)
    out, _ = merge_surgery(td, remove={a, b}, merge=(v2, v4), add_edges=[(v1, v5)])
    counts = {"before": td.vertex_count, "after": out.vertex_count}
    ok = (
        out.vertex_count == td.vertex_count - 3
        and out.is_mpg()
        and count_four_colorings(out, limit=1) > 0
    )
    return CheckResult(
        "merge-surgery", "pass" if ok else "fail", counts, time.time() - t0,
        "" if ok else "surgery result wrong size, not an MPG, or not 4-colorable",
    )


SUITES = {
    "core": ("coloring-tiling-correspondence", "extraction-soundness", "cycle-parity", "merge-surgery"),
    "canal": ("canal-lemma", "ecs-involution", "odd-cycle-amending", "orientation-partition"),
    "kempe": ("rotation-closure-escape",),
    "atlas": ("atlas-counts",),
}
SUITES["all"] = SUITES["core"] + SUITES["canal"] + SUITES["kempe"] + SUITES["atlas"]

CHECKS = {
    "coloring-tiling-correspondence": check_correspondence,
    "extraction-soundness": check_extraction,
    "cycle-parity": check_parity,
    "canal-lemma": check_canal_lemma,
    "ecs-involution": check_ecs_involution,
    "odd-cycle-amending": check_amending,
    "orientation-partition": check_orientation,
    "rotation-closure-escape": check_rotation,
    "atlas-counts": check_atlas,
    "merge-surgery": check_surgery,
}


def run_suite(name: str, printer=None) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    report = SuiteReport(name)
    for check_name in SUITES[name]:
        result = CHECKS[check_name]()
        report.checks.append(result)
        if printer:
            printer(result.line())
    return report
