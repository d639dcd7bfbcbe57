"""
Partial edge-colorings of a single line (a K_{q+1}) and its small variants.

    type_H   q even:  q/2 Hamiltonian cycles
    type_P   q odd:   (q+1)/2 Hamiltonian paths (Type H on K_{q+2}, one vertex dropped)
    type_M   even order: one perfect matching per color
    type_C   q even:  K_{q+1} minus a special edge, q-1 colors, every vertex owns all
    type_1   q even:  K_{q+1} minus a maximum matching, q colors, one missing color per matched vertex
    type_2   q even:  Type 1 plus spokes from an outside special vertex, every line vertex owns all q

Vertices passed in are arbitrary labels; the local decompositions in
factorizations.py run on 0..m-1 and are mapped back through the vertex list.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Sequence

from colorings.factorizations import (hamiltonian_decompose, one_factorize,
                                      one_factorize_containing)
from errors import (NotMaximumMatching, PaletteSizeMismatch, ParityMismatch,
                    SpecialEdgeOutsideHost, SpecialVertexInsideHost)
from geometry.representation import Edge, canon

Color = Hashable


@dataclass(frozen=True)
class OwnerRecord:
    vertex: int
    owned_colors: frozenset


@dataclass
class PartialColoring:
    kind: str
    host_vertices: tuple[int, ...]
    colored_edges: dict[Edge, Color]
    palette: tuple[Color, ...]
    special_edge: Edge | None = None
    special_vertex: int | None = None
    matching: tuple[Edge, ...] = ()
    missing_colors: dict[int, Color] = field(default_factory=dict)

    def owners(self) -> dict[int, set]:
        out: dict[int, set] = defaultdict(set)
        for (u, v), c in self.colored_edges.items():
            out[u].add(c)
            out[v].add(c)
        return out

    def owner_records(self, vertices: Sequence[int] | None = None) -> list[OwnerRecord]:
        own = self.owners()
        vs = self.host_vertices if vertices is None else vertices
        return [OwnerRecord(v, frozenset(own.get(v, ()))) for v in vs]

    def classes(self) -> dict[Color, list[Edge]]:
        out: dict[Color, list[Edge]] = defaultdict(list)
        for e, c in sorted(self.colored_edges.items()):
            out[c].append(e)
        return out

    def uncolored(self) -> list[Edge]:
        return [e for e in combinations(sorted(self.host_vertices), 2) if e not in self.colored_edges]


def _check_palette(palette: Sequence, expected: int, kind: str) -> tuple:
    palette = tuple(palette)
    if len(palette) != expected:
        raise PaletteSizeMismatch(f"Type {kind} needs {expected} colors, got {len(palette)}")
    if len(set(palette)) != len(palette):
        raise PaletteSizeMismatch(f"Type {kind} palette has repeated colors: {palette}")
    return palette


def _check_odd(vertices: Sequence[int], kind: str) -> tuple[int, ...]:
    vs = tuple(vertices)
    if len(set(vs)) != len(vs):
        raise ParityMismatch(f"Type {kind}: repeated host vertices {vs}")
    if len(vs) % 2 == 0:
        raise ParityMismatch(f"Type {kind} needs q+1 odd (q even), got {len(vs)} vertices")
    return vs


def type_H(vertices: Sequence[int], palette: Sequence[Color]) -> PartialColoring:
    vs = _check_odd(vertices, "H")
    q = len(vs) - 1
    if q < 2:
        raise ParityMismatch("Type H needs at least 3 vertices")
    palette = _check_palette(palette, q // 2, "H")
    dec = hamiltonian_decompose(q + 1)
    colored = {}
    for i, c in enumerate(palette):
        for a, b in dec.cycle_edges(i):
            colored[canon(vs[a], vs[b])] = c
    return PartialColoring("H", vs, colored, palette)


def type_P(vertices: Sequence[int], palette: Sequence[Color]) -> PartialColoring:
    vs = tuple(vertices)
    if len(vs) % 2:
        raise ParityMismatch(f"Type P needs q+1 even (q odd), got {len(vs)} vertices")
    q = len(vs) - 1
    palette = _check_palette(palette, (q + 1) // 2, "P")
    aux = q + 1  # local index of the added vertex
    dec = hamiltonian_decompose(q + 2)
    colored = {}
    for i, c in enumerate(palette):
        for a, b in dec.cycle_edges(i):
            if aux not in (a, b):
                colored[canon(vs[a], vs[b])] = c
    return PartialColoring("P", vs, colored, palette)


def type_M(vertices: Sequence[int], palette: Sequence[Color]) -> PartialColoring:
    vs = tuple(vertices)
    if len(vs) % 2 or not vs:
        raise ParityMismatch(f"Type M needs an even vertex count, got {len(vs)}")
    palette = _check_palette(palette, len(vs) - 1, "M")
    fac = one_factorize(len(vs))
    colored = {}
    for c, factor in zip(palette, fac.factors):
        for a, b in factor:
            colored[canon(vs[a], vs[b])] = c
    return PartialColoring("M", vs, colored, palette)


def type_C(vertices: Sequence[int], special_edge: tuple[int, int],
           palette: Sequence[Color]) -> PartialColoring:
    vs = _check_odd(vertices, "C")
    q = len(vs) - 1
    u, v = special_edge
    if u == v or u not in vs or v not in vs:
        raise SpecialEdgeOutsideHost(f"special edge {special_edge} is not an edge of the host {vs}")
    palette = _check_palette(palette, q - 1, "C")
    rest = tuple(w for w in vs if w != u)
    base = type_M(rest, palette)
    colored = dict(base.colored_edges)
    for w in rest:
        if w != v:
            colored[canon(u, w)] = base.colored_edges[canon(v, w)]
    return PartialColoring("C", vs, colored, palette, special_edge=canon(u, v))


def _matched_pairs(vs: tuple[int, ...], M: Sequence[tuple[int, int]]) -> tuple[list[tuple[int, int]], int]:
    pairs = [tuple(p) for p in M]
    covered = [x for p in pairs for x in p]
    q = len(vs) - 1
    if (len(pairs) != q // 2 or len(set(covered)) != len(covered)
            or not set(covered) <= set(vs) or any(a == b for a, b in pairs)):
        raise NotMaximumMatching(f"{list(M)} is not a maximum matching of K_{q + 1} on {vs}")
    unmatched = next(w for w in vs if w not in covered)
    return pairs, unmatched


def type_1(vertices: Sequence[int], M: Sequence[tuple[int, int]],
           palette: Sequence[Color]) -> PartialColoring:
    vs = _check_odd(vertices, "1")
    q = len(vs) - 1
    pairs, v = _matched_pairs(vs, M)
    palette = _check_palette(palette, q, "1")
    local = {w: i for i, w in enumerate(vs)}
    aux = q + 1
    first = [(local[a], local[b]) for a, b in pairs] + [(local[v], aux)]
    fac = one_factorize_containing(q + 2, first)
    colored: dict[Edge, Color] = {}
    missing: dict[int, Color] = {}
    # factor 0 is M + {v, aux}; it carries no color
    for c, factor in zip(palette, fac.factors[1:]):
        for a, b in factor:
            if b == aux:
                missing[vs[a]] = c
            else:
                colored[canon(vs[a], vs[b])] = c
    matching = tuple(sorted(canon(a, b) for a, b in pairs))
    return PartialColoring("1", vs, colored, palette, matching=matching, missing_colors=missing)


def type_2(vertices: Sequence[int], M: Sequence[tuple[int, int]], special_vertex: int,
           palette: Sequence[Color], spoke_targets: Sequence[int] | None = None) -> PartialColoring:
    """Type 1 on the line, then the spokes u-u_i and the matching edges u_i-u_i'.

    `spoke_targets` picks u_i in each matching pair; by default the endpoint
    with the smaller vertex index.
    """
    vs = tuple(vertices)
    if special_vertex in vs:
        raise SpecialVertexInsideHost(f"special vertex {special_vertex} lies on the host {vs}")
    base = type_1(vs, M, palette)
    targets = set(spoke_targets) if spoke_targets is not None else {min(p) for p in M}
    colored = dict(base.colored_edges)
    for a, b in M:
        if (a in targets) == (b in targets):
            raise NotMaximumMatching(f"pair {(a, b)} needs exactly one spoke target, targets={sorted(targets)}")
        ui, ui_ = (a, b) if a in targets else (b, a)
        colored[canon(special_vertex, ui)] = base.missing_colors[ui]
        colored[canon(ui, ui_)] = base.missing_colors[ui_]
    return PartialColoring("2", vs + (special_vertex,), colored, base.palette,
                           special_vertex=special_vertex, matching=base.matching,
                           missing_colors=base.missing_colors)
