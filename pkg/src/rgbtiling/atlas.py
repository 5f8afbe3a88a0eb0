"""Boundary-word classes and catalog enumeration under synonym and symmetry.

A boundary word is the color sequence along a region boundary; words are
classified up to the six global color permutations (synonyms) and a chosen
subgroup of the dihedral group of the cycle positions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .embedding import Edge, Embedding, RegionSpec, RGBTilingError
from .tiling import B, G, MODE_PARTIAL, MODE_RGB, R, RGB, Y, Tiling, boundary_word

_PERMS = tuple(
    dict(zip(RGB, p)) for p in itertools.permutations(RGB)
)


class AtlasError(RGBTilingError):
    pass


def identity_group(n: int) -> tuple[tuple[int, ...], ...]:
    return (tuple(range(n)),)


def dihedral_group(n: int) -> tuple[tuple[int, ...], ...]:
    base = list(range(n))
    out = []
    for k in range(n):
        rot = tuple(base[(i + k) % n] for i in range(n))
        out.append(rot)
        out.append(tuple(reversed(rot)))
    return tuple(dict.fromkeys(out))


def klein4_group(n: int = 6) -> tuple[tuple[int, ...], ...]:
    """Identity, vertical and horizontal reflection and their product.

    Stated on edge positions of a hexagon read as v1-v2, v2-c, c-v4, v4-v5,
    v5-d, d-v1: the vertical mirror fixes positions 0 and 3, the horizontal
    one swaps the top and bottom rows.
    """
    if n != 6:
        raise AtlasError("the reflection four-group is defined on hexagons")
    ident = (0, 1, 2, 3, 4, 5)
    vert = (0, 5, 4, 3, 2, 1)
    horiz = (3, 2, 1, 0, 5, 4)
    both = tuple(vert[horiz[i]] for i in range(6))
    return (ident, vert, horiz, both)


GROUPS = {
    "identity": identity_group,
    "dihedral": dihedral_group,
    "klein4": klein4_group,
}


def canonical_word(
    word: tuple[str, ...], syms: tuple[tuple[int, ...], ...]
) -> tuple[str, ...]:
    """Smallest representative under synonym x position-symmetry."""
    best = None
    for g in syms:
        positioned = tuple(word[g[i]] for i in range(len(word)))
        for perm in _PERMS:
            cand = tuple(perm.get(c, c) for c in positioned)
            if best is None or cand < best:
                best = cand
    return best


def equal_parity_words(n: int) -> list[tuple[str, ...]]:
    out = []
    for w in itertools.product(RGB, repeat=n):
        r, g, b = w.count(R), w.count(G), w.count(B)
        if r % 2 == g % 2 == b % 2:
            out.append(w)
    return out


def adjacency_signature(word: tuple[str, ...]) -> tuple[str, ...] | None:
    """Per-color Y/N whether the color's two edges are cyclically adjacent.

    Defined for (2,2,2) words only; sorted with Y first.
    """
    n = len(word)
    counts = {c: word.count(c) for c in RGB}
    if sorted(counts.values()) != [2, 2, 2]:
        return None
    sig = []
    for c in RGB:
        i, j = [k for k in range(n) if word[k] == c]
        adjacent = (j - i == 1) or (i == 0 and j == n - 1)
        sig.append("Y" if adjacent else "N")
    return tuple(sorted(sig, reverse=True))


@dataclass(frozen=True)
class BoundaryClass:
    canonical: tuple[str, ...]
    members: tuple[tuple[str, ...], ...]
    counts: tuple[int, int, int]  # sorted color counts
    signature: tuple[str, ...] | None  # adjacency signature for (2,2,2)

    @property
    def size(self) -> int:
        return len(self.members)


def enumerate_boundary_classes(
    n: int, sym: tuple[tuple[int, ...], ...] | str = "identity"
) -> list[BoundaryClass]:
    """Orbits of all equal-parity length-n words under synonym x symmetry."""
    if n < 3:
        raise AtlasError("boundary cycles have length at least 3")
    if isinstance(sym, str):
        sym = GROUPS[sym](n)
    orbits: dict[tuple, list] = {}
    for w in equal_parity_words(n):
        orbits.setdefault(canonical_word(w, sym), []).append(w)
    out = []
    for canon in sorted(orbits):
        members = tuple(sorted(orbits[canon]))
        counts = tuple(sorted((canon.count(R), canon.count(G), canon.count(B))))
        out.append(BoundaryClass(canon, members, counts, adjacency_signature(canon)))
    return out


# ---------------------------------------------------------------------------
# Atlas entries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AtlasEntry:
    """One catalog state: boundary class, abandoned pattern, interior colors,
    verified-constraint shape, provenance and (for derived entries) the chain
    of moves leading back to a primary entry."""

    boundary_class: tuple[str, ...]
    abandoned: tuple[Edge, ...]
    interior: tuple[tuple[Edge, str], ...]
    constraints: tuple
    provenance: str  # "primary" | "secondary" | "tertiary" | "4"
    derivation: tuple[str, ...] = ()
    label: str | None = None
    members: int = 1  # tilings collapsed into this key

    def key(self) -> tuple:
        return (self.boundary_class, self.abandoned, self.constraints)

    def boundary_key(self) -> tuple:
        return self.boundary_class


def _entry_for(
    t: Tiling,
    region: RegionSpec,
    sym,
    provenance: str,
    derivation: tuple[str, ...] = (),
) -> AtlasEntry:
    from .kempe import chain_constraints, constraint_summary

    word = boundary_word(t, region.omega).word
    inner = tuple(
        (e, t.colors[e]) for e in sorted(region.inner_sigma_edges())
    )
    cons = ()
    if t.mode == MODE_PARTIAL:
        cons = tuple(sorted(constraint_summary(chain_constraints(t, region))))
    return AtlasEntry(
        canonical_word(word, sym),
        t.abandoned,
        inner,
        cons,
        provenance,
        derivation,
    )


def build_atlas(
    host: Embedding,
    region: RegionSpec,
    provenance: str,
    sym: tuple[tuple[int, ...], ...] | str = "identity",
    caps: int = 20000,
    max_abandoned: int = 2,
) -> list[AtlasEntry]:
    """Catalog states of a region.

    primary: tilings of the host with one abandoned inner edge;
    secondary: closure of the primary set under generalized-ring switches;
    tertiary: tilings with any non-conflicting abandoned subset;
    "4": full rgb tilings keyed by their boundary word.
    Entries are deduplicated by (boundary class, abandoned set, constraints).
    """
    from .enumeration import enumerate_tilings
    from .kempe import default_permit, ecs_generalized, find_generalized_rings

    if isinstance(sym, str):
        sym = GROUPS[sym](len(region.omega))
    inner = region.inner_sigma_edges()
    if not inner:
        raise AtlasError("region has no inner edges; empty topic")
    entries: dict[tuple, AtlasEntry] = {}

    from dataclasses import replace

    def add(entry: AtlasEntry) -> bool:
        if len(entries) >= caps:
            raise AtlasError(f"atlas exceeds the cap of {caps} entries")
        old = entries.get(entry.key())
        if old is None:
            entries[entry.key()] = entry
            return True
        entries[entry.key()] = replace(old, members=old.members + 1)
        return False

    if provenance == "4":
        # local catalog: full rgb tilings of the region itself, any boundary
        from .embedding import region_fragment

        frag, relabel = region_fragment(host, region)
        back = {v: k for k, v in relabel.items()}
        omega_frag = tuple(relabel[v] for v in region.omega)
        for t in enumerate_tilings(frag, MODE_RGB):
            word = boundary_word(t, omega_frag).word
            inner = tuple(
                ((back[u], back[v]) if back[u] < back[v] else (back[v], back[u]),
                 t.colors[(u, v)])
                for (u, v) in sorted(t.colors)
            )
            inner = tuple(
                (e, c) for e, c in inner if e in region.sigma_edges and e not in region.omega_edges
            )
            add(AtlasEntry(canonical_word(word, sym), (), tuple(sorted(inner)), (), "4"))
        return sorted(entries.values(), key=AtlasEntry.key)

    if provenance in ("primary", "secondary"):
        primaries = []
        for e in inner:
            for t in enumerate_tilings(host, MODE_PARTIAL, abandoned=(e,)):
                entry = _entry_for(t, region, sym, "primary", (f"abandon {e}",))
                add(entry)
                primaries.append((t, entry))
        if provenance == "primary":
            return sorted(entries.values(), key=AtlasEntry.key)
        # secondary: close under generalized-ring ECS
        frontier = list(primaries)
        while frontier:
            t, entry = frontier.pop()
            if not t.abandoned:
                continue
            for c in RGB:
                permit = default_permit(t, region, c)
                for exit_edge in region.omega_edges:
                    for ring in find_generalized_rings(t, c, exit_edge, permit):
                        t2 = ecs_generalized(t, ring)
                        move = f"ecs {c} via {exit_edge}"
                        e2 = _entry_for(
                            t2, region, sym, "secondary",
                            entry.derivation + (move,),
                        )
                        if add(e2):
                            frontier.append((t2, e2))
        return sorted(entries.values(), key=AtlasEntry.key)

    if provenance == "tertiary":
        tri_edges = [f.edges for f in host.facets() if f.kind == "triangle"]
        subsets = [()]
        for e in inner:
            subsets = subsets + [
                s + (e,)
                for s in subsets
                if len(s) < max_abandoned and _no_shared_triangle(s + (e,), tri_edges)
            ]
        for s in subsets:
            if not s:
                continue
            for t in enumerate_tilings(host, MODE_PARTIAL, abandoned=s):
                add(_entry_for(t, region, sym, "tertiary", (f"abandon {s}",)))
        return sorted(entries.values(), key=AtlasEntry.key)

    raise AtlasError(f"unknown provenance {provenance!r}")


def _no_shared_triangle(edges: tuple[Edge, ...], tris) -> bool:
    es = set(edges)
    return all(len(es & set(tri)) <= 1 for tri in tris)


def label_entries(entries: list[AtlasEntry], host, region) -> list[AtlasEntry]:
    """Attach catalog names by structural shape; unmatched entries get P<n>.

    The shipped library pins the shapes that are recoverable from structure
    alone: the two one-abandoned-edge states whose diamond is monochromatic
    (named T-alpha and T-beta by canonical order of their boundary classes)
    and the all-pairs-adjacent boundary state with two uninformative
    diamonds (X2).
    """
    from dataclasses import replace
    from .kempe import classify_diamond
    from .enumeration import enumerate_tilings as _et  # noqa: F401  (import kept light)

    named: list[AtlasEntry] = []
    typea_classes = sorted(
        {e.boundary_class for e in entries if len(e.abandoned) == 1 and _entry_kind(e, host) == "A"}
    )
    fresh = 0
    for e in entries:
        label = None
        if len(e.abandoned) == 1 and _entry_kind(e, host) == "A":
            idx = typea_classes.index(e.boundary_class)
            label = ("T-alpha", "T-beta")[idx] if idx < 2 else None
        elif (
            len(e.abandoned) == 2
            and adjacency_signature(e.boundary_class) == ("Y", "Y", "Y")
        ):
            label = "X2"
        if label is None:
            fresh += 1
            label = f"P{fresh}"
        named.append(replace(e, label=label))
    return named


def _entry_kind(e: AtlasEntry, host) -> str | None:
    """Diamond kind of a one-abandoned entry, read from its interior colors."""
    if len(e.abandoned) != 1:
        return None
    (edge,) = e.abandoned
    try:
        d = host.diamond_of(*edge)
    except Exception:
        return None
    colors = dict(e.interior)
    quad = []
    for q in d.quad():
        if q in colors:
            quad.append(colors[q])
        else:
            return None  # quad reaches the boundary; kind not recoverable here
    if len(set(quad)) == 1:
        return "A"
    t1, t2 = set(quad[:2]), set(quad[2:])
    if t1 == t2 and len(t1) == 2:
        return "C"
    return "B"


@dataclass(frozen=True)
class AtlasMatch:
    level: int  # 1 = boundary class, 2 = full entry
    left: AtlasEntry
    right: AtlasEntry


def intersect_atlases(a: list[AtlasEntry], b: list[AtlasEntry]) -> list[AtlasMatch]:
    """Matches by boundary class (level 1) and by full key (level 2)."""
    out = []
    by_boundary: dict[tuple, list[AtlasEntry]] = {}
    for e in b:
        by_boundary.setdefault(e.boundary_key(), []).append(e)
    for ea in a:
        for eb in by_boundary.get(ea.boundary_key(), ()):
            level = 2 if ea.key() == eb.key() else 1
            out.append(AtlasMatch(level, ea, eb))
    return out


def render_table(classes: list[BoundaryClass]) -> str:
    """Text table of boundary classes: word, counts, signature, orbit size."""
    rows = [("word", "counts", "signature", "orbit")]
    for c in classes:
        rows.append(
            (
                "".join(c.canonical),
                str(c.counts),
                "".join(c.signature) if c.signature else "-",
                str(c.size),
            )
        )
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    lines = []
    for i, r in enumerate(rows):
        lines.append("  ".join(r[j].ljust(widths[j]) for j in range(4)))
        if i == 0:
            lines.append("  ".join("-" * widths[j] for j in range(4)))
    return "\n".join(lines)
