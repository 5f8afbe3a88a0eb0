"""Stable JSON and DOT serialisation.

Everything is emitted with sorted keys and canonical edge order so that
identical inputs give byte-identical output.  DOT edges carry their tile
color; abandoned edges render as doubled orange lines (color list syntax).
"""

from __future__ import annotations

import json

from .dual import CanalLine, CanalSystem
from .embedding import Edge, Embedding, ValidationReport
from .kempe import GeneralizedRing, State, StateGraph
from .routes import DiamondRoute, OrientationSets
from .tiling import Tiling, Y

DOT_COLORS = {
    "r": "red",
    "g": "green3",
    "b": "blue",
    "k": "black",
    Y: "orange:orange",
}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def edge_json(e: Edge) -> list[int]:
    return [e[0], e[1]]


def embedding_json(e: Embedding) -> dict:
    return {
        "vertex_count": e.vertex_count,
        "rotation": [list(r) for r in e.rotation],
        "outer_facets": [list(c) for c in e.outer_facets],
        "edges": [edge_json(x) for x in e.edges],
    }


def tiling_json(t: Tiling) -> dict:
    return {
        "mode": t.mode,
        "colors": {f"{u},{v}": c for (u, v), c in sorted(t.colors.items())},
    }


def parse_tiling(text: str, base: Embedding) -> Tiling:
    """Read the tiling file format against a known embedding."""
    from .embedding import GraphFormatError

    mode = None
    colors = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("tiling v1"):
            for tok in line.split():
                if tok.startswith("mode="):
                    mode = tok[5:]
            if mode is None:
                raise GraphFormatError("tiling header lacks mode=", ln)
            mode = {"single:red": "single:r", "single:green": "single:g",
                    "single:blue": "single:b"}.get(mode, mode)
            continue
        if line.startswith("e "):
            parts = line.split()
            if len(parts) != 4:
                raise GraphFormatError("edge line needs 'e <u> <v> <color>'", ln)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError("non-integer edge endpoint", ln)
            if parts[3] not in ("r", "g", "b", "k", "y"):
                raise GraphFormatError(f"unknown color {parts[3]!r}", ln)
            colors[(u, v)] = parts[3]
            continue
        raise GraphFormatError(f"unrecognised line {line!r}", ln)
    if mode is None:
        raise GraphFormatError("missing tiling header")
    return Tiling.make(base, mode, colors)


def format_tiling(t: Tiling) -> str:
    mode = {"single:r": "single:red", "single:g": "single:green",
            "single:b": "single:blue"}.get(t.mode, t.mode)
    lines = [f"tiling v1 mode={mode}"]
    for (u, v), c in sorted(t.colors.items()):
        lines.append(f"e {u} {v} {c}")
    return "\n".join(lines) + "\n"


def tiling_dot(t: Tiling, name: str = "tiling") -> str:
    lines = [f"graph {name} {{"]
    for (u, v), c in sorted(t.colors.items()):
        style = f'color="{DOT_COLORS[c]}"'
        if c == Y:
            style += ', penwidth=1.2'
        lines.append(f"  {u} -- {v} [{style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _node_id(n) -> str:
    return "_".join(str(x) for x in n)


def canal_line_json(line: CanalLine) -> dict:
    return {
        "color": line.color,
        "kind": line.kind,
        "nodes": [list(n) for n in line.nodes],
        "crossed_edges": [edge_json(l.edge) for l in line.links],
        "link_colors": [l.color for l in line.links],
    }


def canal_system_json(system: CanalSystem) -> dict:
    return {
        "color": system.color,
        "lines": [canal_line_json(l) for l in system.lines],
        "boundary_matching": [
            [edge_json(a), edge_json(b)] for a, b in system.boundary_matching
        ],
    }


def canal_system_dot(t: Tiling, system: CanalSystem, name: str = "canals") -> str:
    lines = [f"graph {name} {{"]
    seen = set()
    for li, line in enumerate(system.lines):
        for l in line.links:
            a, b = _node_id(l.a), _node_id(l.b)
            seen.update([(l.a, a), (l.b, b)])
            lines.append(
                f'  {a} -- {b} [color="{DOT_COLORS[l.color]}", style=dashed, label="L{li}"];'
            )
    for n, nid in sorted(seen, key=lambda x: x[1]):
        shape = "circle" if n[0] == "tri" else "box"
        lines.append(f"  {nid} [shape={shape}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def route_json(r: DiamondRoute) -> dict:
    return {
        "color": r.color,
        "edges": [edge_json(e) for e in r.edges],
        "shared_blacks": [edge_json(e) for e in r.blacks],
        "is_ring": r.is_ring,
        "in_triangles": [x for x in r.in_tris],
        "out_triangles": [x for x in r.out_tris],
    }


def route_dot(t: Tiling, r: DiamondRoute, name: str = "route") -> str:
    on_route = set(r.edges) | set(r.blacks)
    lines = [f"graph {name} {{"]
    for (u, v), c in sorted(t.colors.items()):
        style = f'color="{DOT_COLORS[c]}"'
        if (u, v) in on_route:
            style += ", style=dashed, penwidth=2"
        lines.append(f"  {u} -- {v} [{style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def orientation_json(o: OrientationSets) -> dict:
    return {
        "initial_edge": edge_json(o.initial[0]),
        "initial_apex": o.initial[1],
        "out_triangles": sorted(o.out_tris),
        "in_triangles": sorted(o.in_tris),
        "bi": sorted(o.bi),
        "non": sorted(o.non),
        "uni": sorted(o.uni),
        "exceptional_in": sorted(o.exceptional_in),
    }


def ring_json(r: GeneralizedRing) -> dict:
    return {
        "color": r.color,
        "crossed_edges": [edge_json(l.edge) for l in r.links],
        "generalized": list(r.generalized),
    }


def state_json(s: State) -> dict:
    return {
        "label": s.label,
        "boundary_word": list(s.co_omega.word),
        "boundary_counts": list(s.co_omega.counts),
        "abandoned": [edge_json(e) for e in s.tiling.abandoned],
        "constraints": sorted(
            [c, edge_json(e), v] for (c, e, v) in s.constraints
        ),
    }


def state_graph_json(g: StateGraph) -> dict:
    return {
        "complete": g.complete,
        "states": [state_json(s) for s in g.states],
        "moves": [[a, b, m] for a, b, m in g.edges],
        "components": sorted(sorted(c) for c in g.components()),
    }


def state_graph_dot(g: StateGraph, name: str = "states") -> str:
    lines = [f"digraph {name} {{"]
    for i, s in enumerate(g.states):
        word = "".join(s.co_omega.word)
        label = s.label or f"s{i}"
        lines.append(f'  s{i} [label="{label}\\n{word}"];')
    for a, b, m in g.edges:
        lines.append(f'  s{a} -> s{b} [label="{m}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def atlas_json(entries) -> list:
    return [
        {
            "boundary_class": "".join(e.boundary_class),
            "abandoned": [edge_json(x) for x in e.abandoned],
            "interior": [[edge_json(x), c] for x, c in e.interior],
            "constraints": sorted(
                [c, edge_json(x), v] for (c, x, v) in e.constraints
            ),
            "provenance": e.provenance,
            "derivation": list(e.derivation),
            "label": e.label,
        }
        for e in entries
    ]


def validation_json(rep: ValidationReport) -> dict:
    return rep.to_dict()
