"""
Global colorings of K_n, n = q^2 + q + 1, assembled line by line on the
representation of PG(2, q):

  theorem3_coloring(q)        connected + complete, ceil(q/2) * n colors
  theorem5_coloring(q)        complete, q^3 + 2q - 3 colors, q a power of 2
  connected_coloring_best(n)  theorem3 on the largest plane that fits, extended to K_n

Colors are 1-based ints. Every construction carries the ColorPartition whose
classes the lines own, so the verifier can check the line-ownership premise
independently of how the coloring was built.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from colorings.line_types import PartialColoring, type_2, type_C, type_H, type_P
from errors import InternalConstructionFailure, TooSmall, UnsupportedOrder
from eval.bounds import best_connected_lower_bound
from geometry.galois_field import make_field, supported_orders
from geometry.projective_plane import build_plane
from geometry.representation import Edge, LineRepresentation, canon, realize
from run_utils import run_jobs

THEOREM5_ORDERS = (2, 4, 8, 16)


@dataclass(frozen=True)
class ColorPartition:
    classes: tuple[tuple[int, ...], ...]   # C_1 .. C_n
    owner_lines: tuple[int, ...]           # representation line that owns each class

    def is_partition_of(self, k: int) -> bool:
        flat = [c for cls in self.classes for c in cls]
        return sorted(flat) == list(range(1, k + 1))

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]


@dataclass
class EdgeColoring:
    n: int
    k: int
    color_of: dict[Edge, int]
    provenance: dict = field(default_factory=dict)
    partition: ColorPartition | None = None

    def edges(self) -> list[tuple[int, int, int]]:
        return [(u, v, self.color_of[(u, v)]) for u, v in sorted(self.color_of)]

    def is_total(self) -> bool:
        return len(self.color_of) == comb(self.n, 2)

    def color_classes(self) -> dict[int, list[Edge]]:
        out: dict[int, list[Edge]] = {c: [] for c in range(1, self.k + 1)}
        for e, c in sorted(self.color_of.items()):
            out.setdefault(c, []).append(e)
        return out

    def class_sizes(self) -> np.ndarray:
        """Edge count of color c at index c-1."""
        counts = np.bincount(np.fromiter(self.color_of.values(), dtype=np.int64), minlength=self.k + 1)
        return counts[1:]

    def relabel(self, vertex_perm, color_perm) -> "EdgeColoring":
        """Vertex u -> vertex_perm[u], color c -> color_perm[c-1] (both 0-based permutations).

        The partition keeps its owner line indices; pair it with
        LineRepresentation.relabel(vertex_perm).
        """
        color_of = {canon(int(vertex_perm[u]), int(vertex_perm[v])): int(color_perm[c - 1]) + 1
                    for (u, v), c in self.color_of.items()}
        partition = None
        if self.partition is not None:
            partition = ColorPartition(
                classes=tuple(tuple(int(color_perm[c - 1]) + 1 for c in cls) for cls in self.partition.classes),
                owner_lines=self.partition.owner_lines)
        return EdgeColoring(n=self.n, k=self.k, color_of=color_of, partition=partition,
                            provenance=dict(self.provenance, relabeled=True))


@lru_cache(maxsize=None)
def plane_representation(q: int) -> LineRepresentation:
    return realize(build_plane(make_field(q)))


def _merge(parts: list[PartialColoring]) -> dict[Edge, int]:
    color_of: dict[Edge, int] = {}
    for part in parts:
        for e, c in part.colored_edges.items():
            if e in color_of:
                raise InternalConstructionFailure(
                    f"edge {e} colored twice (Type {part.kind} on {part.host_vertices})")
            color_of[e] = c
    return color_of


def _check_line_ownership(color_of: dict[Edge, int], rep: LineRepresentation,
                          partition: ColorPartition) -> None:
    owned: dict[int, set] = {v: set() for v in range(rep.n)}
    for (u, v), c in color_of.items():
        owned[u].add(c)
        owned[v].add(c)
    for cls, line in zip(partition.classes, partition.owner_lines):
        for x in rep.line_vertices[line]:
            if not set(cls) <= owned[x]:
                raise InternalConstructionFailure(
                    f"line {line} does not own its palette {cls} (vertex {x})")


# ---------------------------------------------------------------------------
# Connected construction
# ---------------------------------------------------------------------------

def theorem3_coloring(q: int, n_jobs: int = 1) -> EdgeColoring:
    if q not in supported_orders():
        raise UnsupportedOrder(f"theorem3 needs a supported prime power q in {supported_orders()}, got q={q}")
    rep = plane_representation(q)
    per_line = -(-q // 2)
    # q+1 odd -> Hamiltonian cycles, q+1 even -> Hamiltonian paths
    line_type = type_H if q % 2 == 0 else type_P
    classes = tuple(tuple(range(i * per_line + 1, (i + 1) * per_line + 1)) for i in range(rep.n))
    parts = run_jobs(line_type, [(rep.line_vertices[i], classes[i]) for i in range(rep.n)], n_jobs=n_jobs)
    partition = ColorPartition(classes=classes, owner_lines=tuple(range(rep.n)))
    color_of = _merge(parts)
    return EdgeColoring(n=rep.n, k=per_line * rep.n, color_of=color_of,
                        provenance={"construction": "theorem3", "q": q}, partition=partition)


# ---------------------------------------------------------------------------
# Complete construction for q a power of 2
# ---------------------------------------------------------------------------

@dataclass
class Theorem5Labels:
    """1-based construction labels on top of representation indices."""
    q: int
    line: dict[int, int]          # l_t -> representation line index, t = 1..n
    v: dict[int, int]             # v_i -> vertex, i = 1..q+1


def label_lines(rep: LineRepresentation) -> Theorem5Labels:
    q, n = rep.q, rep.n
    ln = 0  # the lexicographically first line plays l_n
    v = {i + 1: x for i, x in enumerate(rep.line_vertices[ln])}
    line = {n: ln}
    for i in range(1, q + 2):
        pencil = [l for l in rep.pencil(v[i]) if l != ln]
        if len(pencil) != q:
            raise InternalConstructionFailure(f"pencil of v_{i} has {len(pencil)} lines, expected {q}")
        for j, l in enumerate(pencil, start=1):
            line[q * (i - 1) + j] = l
    return Theorem5Labels(q=q, line=line, v=v)


def _palettes(q: int) -> dict[int, tuple[int, ...]]:
    """C_1 .. C_n as consecutive runs of colors: q-1 colors up to C_{q^2-q+3}, q after."""
    n = q * q + q + 1
    out, nxt = {}, 1
    for i in range(1, n + 1):
        size = q - 1 if i <= q * q - q + 3 else q
        out[i] = tuple(range(nxt, nxt + size))
        nxt += size
    return out


def _target_line(q: int, i: int, j: int) -> int:
    """Line of L_q or L_{q+1} that receives the special edge of l_{q(i-1)+j}."""
    half = q // 2
    if i <= half:
        return q * (q - 1) + 2 * i - (1 if j <= half else 0)
    return q * q + 2 * (i - half) - (1 if j <= half else 0)


def theorem5_coloring(q: int, n_jobs: int = 1) -> EdgeColoring:
    if q not in THEOREM5_ORDERS:
        raise UnsupportedOrder(f"theorem5 needs q a power of 2 in {THEOREM5_ORDERS}, got q={q}")
    rep = plane_representation(q)
    n, half = rep.n, q // 2
    lab = label_lines(rep)
    L, v = lab.line, lab.v
    C = _palettes(q)
    k = q ** 3 + 2 * q - 3

    jobs: list[tuple] = []
    owner: dict[int, int] = {}      # palette index -> paper line index
    special: dict[int, Edge] = {}   # e_t
    spokes: dict[int, list[int]] = {}  # paper target line -> spoke endpoints on it

    # i) Type C on the lines of L_1 .. L_{q-1}, special edges aimed at L_q / L_{q+1}
    for i in range(1, q):
        for j in range(1, q + 1):
            t = q * (i - 1) + j
            target = _target_line(q, i, j)
            u = rep.intersection(L[t], L[target])
            if u == v[i]:
                raise InternalConstructionFailure(f"special edge of l_{t} degenerates at v_{i}")
            special[t] = canon(v[i], u)
            spokes.setdefault(target, []).append(u)
            jobs.append((type_C, (rep.line_vertices[L[t]], (u, v[i]), C[t])))
            owner[t] = t

    # ii) Type C on l_n, l_{n-1}, l_{n-2}, special edge = least edge of the line
    for d in range(3):
        vs = rep.line_vertices[L[n - d]]
        special[n - d] = (vs[0], vs[1])
        c_idx = q * q - q + 3 - d
        jobs.append((type_C, (vs, (vs[0], vs[1]), C[c_idx])))
        owner[c_idx] = n - d

    # iii) Type 2 on the lines of L_q and L_{q+1} minus {l_{n-1}, l_{n-2}}
    # G_j: (line l_t, special vertex, palette index, e_{first+1} .. e_{first+q/2} are its spokes)
    batches = [(q * (q - 1) + j, v[-(-j // 2)], q * q - q + 3 + j, (j - 1) * half)
               for j in range(1, q + 1)]
    batches += [(q * q + j, v[half - (-j // 2)], q * q + 3 + j, q * q // 2 + (j - 1) * half)
                for j in range(1, q - 1)]
    for t, s, c_idx, first_edge in batches:
        expected = sorted(x for e in (special[first_edge + r] for r in range(1, half + 1)) for x in e if x != s)
        got = sorted(spokes.get(t, []))
        if got != expected or len(got) != half:
            raise InternalConstructionFailure(f"spokes into l_{t}: got {got}, G_j expects {expected}")
        vs = rep.line_vertices[L[t]]
        hub = next(x for x in vs if x in v.values())
        others = [x for x in vs if x != hub and x not in got]
        M = list(zip(got, others))
        jobs.append((type_2, (vs, M, s, C[c_idx], got)))
        owner[c_idx] = t

    parts = run_jobs(_call, jobs, n_jobs=n_jobs)
    color_of = _merge(parts)

    # iv) the three remaining special edges take color 1
    for d in range(3):
        e = special[n - d]
        if e in color_of:
            raise InternalConstructionFailure(f"special edge {e} of l_{n - d} already colored")
        color_of[e] = 1

    if len(color_of) != comb(n, 2):
        missing = [e for e in combinations(range(n), 2) if e not in color_of][:3]
        raise InternalConstructionFailure(f"{comb(n, 2) - len(color_of)} edges uncolored, e.g. {missing}")

    partition = ColorPartition(
        classes=tuple(C[i] for i in range(1, n + 1)),
        owner_lines=tuple(L[owner[i]] for i in range(1, n + 1)),
    )
    _check_line_ownership(color_of, rep, partition)
    return EdgeColoring(n=n, k=k, color_of=color_of, partition=partition,
                        provenance={"construction": "theorem5", "q": q, "previous_bound": q ** 3 + q})


def _call(fn, args):
    return fn(*args)


# ---------------------------------------------------------------------------
# Arbitrary n via a subgraph
# ---------------------------------------------------------------------------

def extend_connected(base: EdgeColoring, n: int) -> EdgeColoring:
    """Color the edges of K_n outside K_m (m = base.n) keeping classes connected.

    Edge ab with a < b takes the color of a colored edge at a: the edge to the
    first other base vertex when a is a base vertex, the edge 0a otherwise
    (already colored, since 0a precedes ab).
    """
    m = base.n
    color_of = dict(base.color_of)
    for a, b in combinations(range(n), 2):
        if (a, b) in color_of:
            continue
        ref = canon(a, 1 if a == 0 else 0) if a < m else (0, a)
        color_of[(a, b)] = color_of[ref]
    prov = dict(base.provenance, construction="best-connected", base_n=m)
    return EdgeColoring(n=n, k=base.k, color_of=color_of, provenance=prov)


def connected_coloring_best(n: int, n_jobs: int = 1) -> EdgeColoring:
    if n < 7:
        raise TooSmall(f"no projective plane fits in K_{n}; need n >= 7")
    q, _ = best_connected_lower_bound(n)
    return extend_connected(theorem3_coloring(q, n_jobs=n_jobs), n)
