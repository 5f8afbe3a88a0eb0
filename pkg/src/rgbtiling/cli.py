"""Command-line front end.

Graphs are file paths or ``corpus:<name>`` references; tilings are files,
``first`` (lexicographically first of the requested mode) or ``seed:`` for
the shipped amending seeds.  JSON output has stable ordering; exit code 0
means success, 1 a violated property or nonexistence, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import corpus, export
from .atlas import GROUPS, build_atlas, enumerate_boundary_classes, render_table
from .dual import extract_canal_system
from .embedding import (
    Embedding, GraphFormatError, RGBTilingError, edge_key, format_graph,
    merge_surgery, parse_graph, region_of, validate_semi_mpg,
)
from .enumeration import enumerate_four_colorings, enumerate_tilings
from .kempe import (
    chain_constraints, classify_diamond, congruence_explore, default_permit,
    ecs_generalized, find_generalized_rings, rotate_td, sigma_adjust_retile,
    sigma_adjust_ring,
)
from .routes import ecs_diamond_route, orientation_sets, search_diamond_route, search_route_rings
from .suite import SUITES, run_suite
from .tiling import (
    MODE_PARTIAL, MODE_RGB, RGB, Tiling, boundary_word, check_grand,
    complete_to_rgb, extract_four_coloring, find_mono_odd_cycle, induce_tiling,
    OddConflictCycle, single_mode, synonym_canonical, validate_tiling,
)

OK, VIOLATION, INPUT_ERROR = 0, 1, 2


def _load_graph(spec: str) -> Embedding:
    if spec.startswith("corpus:"):
        return corpus.get(spec.split(":", 1)[1])
    if spec in corpus.CORPUS:
        return corpus.get(spec)
    with open(spec, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _load_tiling(spec: str, base: Embedding, mode: str) -> Tiling:
    if spec == "first":
        try:
            return next(enumerate_tilings(base, mode))
        except StopIteration:
            raise RGBTilingError(f"graph has no {mode} tiling")
    if spec.startswith("seed:"):
        return corpus.seeded_tiling(spec.split(":", 1)[1])
    with open(spec, encoding="utf-8") as fh:
        return export.parse_tiling(fh.read(), base)


def _emit(args, payload: dict | str) -> None:
    text = payload if isinstance(payload, str) else export.dumps(payload)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _edge(arg: str) -> tuple[int, int]:
    u, v = arg.split(",")
    return edge_key(int(u), int(v))


def _vertices(arg: str) -> set[int]:
    return {int(x) for x in arg.split(",") if x != ""}


def _check_size(args, e: Embedding) -> None:
    cap = getattr(args, "max_vertices", None)
    if cap is not None and e.vertex_count > cap:
        raise RGBTilingError(
            f"graph has {e.vertex_count} vertices, over the --max-vertices cap {cap}"
        )


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_validate(args) -> int:
    e = _load_graph(args.graph)
    rep = validate_semi_mpg(e)
    _emit(args, rep.to_dict())
    return OK


def cmd_tile(args) -> int:
    e = _load_graph(args.graph)
    _check_size(args, e)
    tilings = enumerate_tilings(e, args.mode, limit=args.limit)
    if args.count:
        n = sum(1 for _ in tilings)
        _emit(args, {"mode": args.mode, "count": n})
        return OK if n > 0 else VIOLATION
    out = []
    for t in tilings:
        out.append(export.tiling_json(t))
    _emit(args, {"mode": args.mode, "count": len(out), "tilings": out})
    return OK if out else VIOLATION


def cmd_color(args) -> int:
    e = _load_graph(args.graph)
    _check_size(args, e)
    n = 0
    first = None
    for f in enumerate_four_colorings(e, limit=args.limit):
        if first is None:
            first = f
        n += 1
    payload = {"count": n}
    if first is not None:
        payload["first"] = {str(v): c for v, c in sorted(first.items())}
        if args.induce:
            payload["induced_tiling"] = export.tiling_json(induce_tiling(e, first))
    _emit(args, payload)
    return OK if n else VIOLATION


def cmd_odd_cycle(args) -> int:
    e = _load_graph(args.graph)
    t = _load_tiling(args.tiling, e, args.mode)
    colors = [args.color] if args.color else list(RGB)
    found = {}
    for c in colors:
        cyc = find_mono_odd_cycle(t, c)
        if cyc is not None:
            found[c] = list(cyc)
    _emit(args, {"odd_cycles": found})
    return OK if found else VIOLATION


def cmd_grand(args) -> int:
    e = _load_graph(args.graph)
    t = _load_tiling(args.tiling, e, args.mode)
    witness = check_grand(t)
    if witness is None:
        _emit(args, {"grand": False})
        return VIOLATION
    v1, v2 = witness
    _emit(args, {"grand": True, "v1": sorted(v1), "v2": sorted(v2)})
    return OK


def cmd_complete(args) -> int:
    e = _load_graph(args.graph)
    t = _load_tiling(args.tiling, e, args.mode)
    try:
        full = complete_to_rgb(t)
    except OddConflictCycle as exc:
        _emit(args, {"completed": False,
                     "odd_conflict_cycle": [export.edge_json(x) for x in exc.cycle]})
        return VIOLATION
    if args.format == "dot":
        _emit(args, export.tiling_dot(full))
    else:
        _emit(args, {"completed": True, "tiling": export.tiling_json(full)})
    return OK


def cmd_canals(args) -> int:
    e = _load_graph(args.graph)
    t = _load_tiling(args.tiling, e, args.mode)
    system = extract_canal_system(e, t, args.color)
    if args.format == "dot":
        _emit(args, export.canal_system_dot(t, system))
    else:
        _emit(args, export.canal_system_json(system))
    return OK


def cmd_routes(args) -> int:
    e = _load_graph(args.graph)
    t = _load_tiling(args.tiling, e, args.mode)
    target = args.to if args.to in ("ring", "outer") else _edge(args.to)
    route = search_diamond_route(t, (_edge(args.from_edge), args.apex), target,
                                 max_len=args.max_route_len)
    if route is None:
        _emit(args, {"found": False})
        return VIOLATION
    if args.format == "dot":
        _emit(args, export.route_dot(t, route))
    else:
        _emit(args, {"found": True, "route": export.route_json(route)})
    return OK


def cmd_orient(args) -> int:
    e = _load_graph(args.graph)
    t = _load_tiling(args.tiling, e, args.mode)
    o = orientation_sets(t, (_edge(args.from_edge), args.apex),
                         max_len=args.max_route_len)
    _emit(args, export.orientation_json(o))
    return OK


def cmd_ecs(args) -> int:
    e = _load_graph(args.graph)
    t = _load_tiling(args.tiling, e, args.mode)
    if args.kind == "canal":
        system = extract_canal_system(e, t, args.color)
        rings = system.rings()
        if args.index >= len(rings):
            raise RGBTilingError(f"no canal ring {args.index}; found {len(rings)}")
        out = __import__("rgbtiling.dual", fromlist=["ecs_canal_ring"]).ecs_canal_ring(t, rings[args.index])
    else:
        rings = search_route_rings(t, args.color, max_len=args.max_route_len)
        if args.index >= len(rings):
            raise RGBTilingError(f"no route ring {args.index}; found {len(rings)}")
        out = ecs_diamond_route(t, rings[args.index])
    _emit(args, export.format_tiling(out))
    return OK


def cmd_diamond_type(args) -> int:
    e = _load_graph(args.graph)
    t = _load_tiling(args.tiling, e, MODE_PARTIAL)
    d = classify_diamond(t, _edge(args.edge))
    _emit(args, {
        "edge": export.edge_json(d.edge),
        "quad": list(d.quad),
        "kind": d.kind,
        "chain_colors": list(d.chain_colors),
        "completion": d.completion,
    })
    return OK


def cmd_chains(args) -> int:
    e = _load_graph(args.graph)
    t = _load_tiling(args.tiling, e, MODE_PARTIAL)
    region = region_of(e, _vertices(args.td))
    cons = chain_constraints(t, region)
    _emit(args, {
        "constraints": [
            {
                "color": c.color,
                "edge": export.edge_json(c.source_edge),
                "verified": c.verified,
                "witness": list(c.witness) if c.witness else None,
                "outside_segments": [list(s) for s in c.sigma_prime_segments],
            }
            for c in cons
        ]
    })
    return OK


def cmd_gring(args) -> int:
    e = _load_graph(args.graph)
    t = _load_tiling(args.tiling, e, MODE_PARTIAL)
    region = region_of(e, _vertices(args.td))
    permit = default_permit(t, region, args.color)
    if args.permit:
        permit = frozenset(_edge(x) for x in args.permit.split(";"))
    rings = find_generalized_rings(t, args.color, _edge(args.exit), permit,
                                   max_links=args.max_links)
    _emit(args, {"rings": [export.ring_json(r) for r in rings]})
    return OK if rings else VIOLATION


def cmd_sigma_adjust(args) -> int:
    e = _load_graph(args.graph)
    t = _load_tiling(args.tiling, e, args.mode)
    region = region_of(e, _vertices(args.td))
    if args.method == "ring":
        out = sigma_adjust_ring(t, region, args.color)
        if out is None:
            _emit(args, {"adjusted": False})
            return VIOLATION
    else:
        if not args.assign:
            raise RGBTilingError("--method retile needs --assign u,v;u,v;...")
        edges = {_edge(x) for x in args.assign.split(";")}
        out = sigma_adjust_retile(t, region, args.color, edges)
    _emit(args, export.format_tiling(out))
    return OK


def cmd_rotate(args) -> int:
    e = _load_graph(args.graph)
    t = _load_tiling(args.tiling, e, MODE_PARTIAL)
    region = region_of(e, _vertices(args.td))
    schedule = tuple(
        "auto" if s == "auto" else s for s in args.schedule.split(",")
    )
    res = rotate_td(t, region, schedule)
    payload = {
        "outcome": res.outcome,
        "steps": [
            {"color": s.color,
             "exit": export.edge_json(s.exit_edge) if s.exit_edge else None,
             "state": export.state_json(s.state)}
            for s in res.steps
        ],
    }
    if res.coloring is not None:
        payload["coloring"] = {str(v): c for v, c in sorted(res.coloring.items())}
    _emit(args, payload)
    return OK if res.outcome in ("closed", "escape") else VIOLATION


def cmd_explore(args) -> int:
    e = _load_graph(args.graph)
    _check_size(args, e)
    t = _load_tiling(args.tiling, e, MODE_PARTIAL)
    region = region_of(e, _vertices(args.td))
    g = congruence_explore(
        t, region, moves=tuple(args.moves.split(",")), max_states=args.max_states
    )
    if args.format == "dot":
        _emit(args, export.state_graph_dot(g))
    else:
        _emit(args, export.state_graph_json(g))
    return OK


def cmd_atlas(args) -> int:
    if args.graph is None:
        classes = enumerate_boundary_classes(args.n, args.sym)
        if args.format == "text":
            _emit(args, render_table(classes) + "\n")
        else:
            _emit(args, {
                "n": args.n,
                "sym": args.sym,
                "classes": [
                    {"word": "".join(c.canonical),
                     "counts": list(c.counts),
                     "signature": list(c.signature) if c.signature else None,
                     "orbit_size": c.size}
                    for c in classes
                ],
            })
        return OK
    e = _load_graph(args.graph)
    _check_size(args, e)
    region = region_of(e, _vertices(args.td))
    entries = build_atlas(e, region, args.provenance, args.sym)
    from .atlas import label_entries

    entries = label_entries(entries, e, region)
    _emit(args, {"entries": export.atlas_json(entries)})
    return OK


def cmd_surgery(args) -> int:
    e = _load_graph(args.graph)
    merge = None
    if args.merge:
        k, a = args.merge.split(",")
        merge = (int(k), int(a))
    adds = [_edge(x) for x in args.add.split(";")] if args.add else []
    out, relabel = merge_surgery(
        e, remove=_vertices(args.remove) if args.remove else set(),
        merge=merge, add_edges=adds,
    )
    payload = {
        "graph": format_graph(out),
        "vertex_map": {str(k): v for k, v in sorted(relabel.items())},
        "validation": validate_semi_mpg(out).to_dict(),
    }
    if args.format == "text":
        _emit(args, format_graph(out))
    else:
        _emit(args, payload)
    return OK


def cmd_check(args) -> int:
    names = [args.suite]
    if args.suite not in SUITES:
        raise RGBTilingError(f"unknown suite {args.suite!r}; choose from {sorted(SUITES)}")
    report = _run_checks(args)
    for c in report.checks:
        print(c.line())
    if args.out:
        _write_check_outputs(report, args.out)
        print(f"report written to {args.out}/")
    return VIOLATION if report.failed else OK


def _run_checks(args):
    from .suite import CHECKS, SuiteReport

    names = SUITES[args.suite]
    report = SuiteReport(args.suite)
    if args.threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            for result in pool.map(lambda n: CHECKS[n](), names):
                report.checks.append(result)
    else:
        for name in names:
            report.checks.append(CHECKS[name]())
    return report


def _write_check_outputs(report, out_dir: str) -> None:
    """The report bundle: one CSV plus a figure per corpus graph."""
    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, "results.csv"), "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["check", "status", "elapsed_s", "counts", "detail"])
        for c in report.checks:
            w.writerow([c.name, c.status, f"{c.elapsed:.3f}", json.dumps(c.counts, sort_keys=True), c.detail])
    with open(os.path.join(out_dir, "results.json"), "w", encoding="utf-8") as fh:
        fh.write(export.dumps(report.to_dict()))
    from .viz import save_tiling_figure

    for name in corpus.CORPUS:
        e = corpus.get(name)
        try:
            t = next(enumerate_tilings(e, MODE_RGB))
        except StopIteration:
            continue
        save_tiling_figure(t, os.path.join(out_dir, f"{name}.png"),
                           title=f"{name}: first rgb tiling")
    for c in report.checks:
        if c.counterexample:
            base = os.path.join(out_dir, f"counterexample-{c.name}")
            with open(base + ".graph", "w", encoding="utf-8") as fh:
                fh.write(c.counterexample["graph"])
            if "tiling" in c.counterexample:
                with open(base + ".tiling", "w", encoding="utf-8") as fh:
                    fh.write(c.counterexample["tiling"])


def cmd_draw(args) -> int:
    from .viz import save_tiling_figure

    e = _load_graph(args.graph)
    t = _load_tiling(args.tiling, e, args.mode)
    path = args.out or "tiling.png"
    save_tiling_figure(t, path, title=args.title)
    print(f"figure written to {path}")
    return OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rgbtiling",
        description="RGB tilings, canal lines and Kempe machinery on planar triangulations",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(fn=fn)
        sp.add_argument("--format", choices=("json", "dot", "text"), default="json")
        sp.add_argument("--out", help="write output to this path")
        sp.add_argument("--seed", type=int, default=0, help="reserved for reproducibility")
        return sp

    def add_graph(sp, tiling_mode=None):
        sp.add_argument("graph", help="graph file or corpus:<name>")
        if tiling_mode is not None:
            sp.add_argument("--tiling", default="first",
                            help="tiling file, 'first', or seed:<corpus-name>")
            sp.add_argument("--mode", default=tiling_mode,
                            help="tiling mode for --tiling first")

    sp = add("validate", cmd_validate, help="structural report for a graph file")
    sp.add_argument("graph")

    sp = add("tile", cmd_tile, help="enumerate or count tilings")
    sp.add_argument("graph")
    sp.add_argument("--mode", default=MODE_RGB)
    sp.add_argument("--limit", type=int)
    sp.add_argument("--count", action="store_true")
    sp.add_argument("--max-vertices", type=int, default=64)

    sp = add("color", cmd_color, help="enumerate proper 4-colorings")
    sp.add_argument("graph")
    sp.add_argument("--limit", type=int)
    sp.add_argument("--induce", action="store_true")
    sp.add_argument("--max-vertices", type=int, default=64)

    sp = add("odd-cycle", cmd_odd_cycle, help="find monochromatic odd cycles")
    add_graph(sp, MODE_RGB)
    sp.add_argument("--color", choices=RGB)

    sp = add("grand", cmd_grand, help="grandness witness of a single-color tiling")
    add_graph(sp, single_mode("g"))

    sp = add("complete", cmd_complete, help="complete a single-color tiling to rgb")
    add_graph(sp, single_mode("g"))

    sp = add("canals", cmd_canals, help="canal system of a tiling")
    add_graph(sp, MODE_RGB)
    sp.add_argument("--color", choices=RGB, default="r")

    sp = add("routes", cmd_routes, help="search a diamond route")
    add_graph(sp, single_mode("g"))
    sp.add_argument("--from-edge", required=True, metavar="U,V")
    sp.add_argument("--apex", type=int, required=True)
    sp.add_argument("--to", default="ring", help="'ring', 'outer' or U,V")
    sp.add_argument("--max-route-len", type=int, default=40)

    sp = add("orient", cmd_orient, help="orientation sets from an initiator")
    add_graph(sp, single_mode("g"))
    sp.add_argument("--from-edge", required=True, metavar="U,V")
    sp.add_argument("--apex", type=int, required=True)
    sp.add_argument("--max-route-len", type=int, default=40)

    sp = add("ecs", cmd_ecs, help="edge-color-switch along a found ring")
    add_graph(sp, MODE_RGB)
    sp.add_argument("--kind", choices=("canal", "route"), default="canal")
    sp.add_argument("--color", choices=RGB, default="r")
    sp.add_argument("--index", type=int, default=0)
    sp.add_argument("--max-route-len", type=int, default=40)

    sp = add("diamond-type", cmd_diamond_type, help="classify an abandoned edge")
    add_graph(sp)
    sp.add_argument("--tiling", required=True)
    sp.add_argument("--edge", required=True, metavar="U,V")

    sp = add("chains", cmd_chains, help="Kempe-chain constraints of a region")
    add_graph(sp)
    sp.add_argument("--tiling", required=True)
    sp.add_argument("--td", required=True, metavar="V1,V2,...")

    sp = add("gring", cmd_gring, help="generalized canal rings through an exit")
    add_graph(sp)
    sp.add_argument("--tiling", required=True)
    sp.add_argument("--td", required=True)
    sp.add_argument("--color", choices=RGB, required=True)
    sp.add_argument("--exit", required=True, metavar="U,V")
    sp.add_argument("--permit", help="override: semicolon-separated U,V list")
    sp.add_argument("--max-links", type=int, default=80)

    sp = add("sigma-adjust", cmd_sigma_adjust, help="re-color inside a region boundary")
    add_graph(sp, MODE_RGB)
    sp.add_argument("--td", required=True)
    sp.add_argument("--method", choices=("ring", "retile"), default="ring")
    sp.add_argument("--color", choices=RGB, default="r")
    sp.add_argument("--assign", help="retile: semicolon-separated U,V list of c edges")

    sp = add("rotate", cmd_rotate, help="rotate the abandoned edge around a region")
    add_graph(sp)
    sp.add_argument("--tiling", required=True)
    sp.add_argument("--td", required=True)
    sp.add_argument("--schedule", default="auto,auto,auto,auto,auto")

    sp = add("explore", cmd_explore, help="congruence state graph by BFS")
    add_graph(sp)
    sp.add_argument("--tiling", required=True)
    sp.add_argument("--td", required=True)
    sp.add_argument("--moves", default="canal-ecs,generalized-ecs")
    sp.add_argument("--max-states", type=int, default=2000)
    sp.add_argument("--max-vertices", type=int, default=64)

    sp = add("atlas", cmd_atlas, help="boundary classes or a region catalog")
    sp.add_argument("graph", nargs="?")
    sp.add_argument("--n", type=int, default=6)
    sp.add_argument("--sym", choices=sorted(GROUPS), default="klein4")
    sp.add_argument("--td")
    sp.add_argument("--provenance", choices=("primary", "secondary", "tertiary", "4"),
                    default="primary")
    sp.add_argument("--max-vertices", type=int, default=64)

    sp = add("surgery", cmd_surgery, help="remove vertices, merge a pair, add chords")
    sp.add_argument("graph")
    sp.add_argument("--remove", help="comma-separated vertex ids")
    sp.add_argument("--merge", help="keep,absorb")
    sp.add_argument("--add", help="semicolon-separated U,V chords")

    sp = add("check", cmd_check, help="run an acceptance suite")
    sp.add_argument("suite", choices=sorted(SUITES))
    sp.add_argument("--max-vertices", type=int, default=64)
    sp.add_argument("--threads", type=int, default=1)

    sp = add("draw", cmd_draw, help="render a tiling to an image file")
    add_graph(sp, MODE_RGB)
    sp.add_argument("--title")

    return p


def dispatch(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (OSError, GraphFormatError, RGBTilingError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
