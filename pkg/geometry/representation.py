"""
K_n as a representation of PG(2, q): vertex i is plane point i, and each plane
line induces a K_{q+1} whose edge sets partition E(K_n).

Edges are canonical (min, max) tuples everywhere in this project.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb

import numpy as np

from errors import SameVertex, VertexOutOfRange
from geometry.projective_plane import ProjectivePlane

Edge = tuple[int, int]


def canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LineRepresentation:
    n: int
    q: int
    line_vertices: tuple[tuple[int, ...], ...]
    line_edges: tuple[tuple[Edge, ...], ...] = field(repr=False)

    @cached_property
    def _line_of_pair(self) -> np.ndarray:
        table = np.full((self.n, self.n), -1, dtype=np.int64)
        for i, vs in enumerate(self.line_vertices):
            idx = np.array(vs, dtype=np.int64)
            table[np.ix_(idx, idx)] = i
        return table

    def line_through(self, u: int, v: int) -> int:
        if u == v:
            raise SameVertex(f"line_through needs two distinct vertices, got {u} twice")
        for x in (u, v):
            if not 0 <= x < self.n:
                raise VertexOutOfRange(f"vertex {x} is not in K_{self.n} (vertices 0..{self.n - 1})")
        return int(self._line_of_pair[u, v])

    def pencil(self, vertex: int) -> list[int]:
        """Indices of the q+1 lines through `vertex`, ascending."""
        return [i for i, vs in enumerate(self.line_vertices) if vertex in vs]

    def intersection(self, i: int, j: int) -> int:
        """The unique vertex shared by lines i != j."""
        common = set(self.line_vertices[i]) & set(self.line_vertices[j])
        if len(common) != 1:
            raise ValueError(f"lines {i} and {j} share {len(common)} vertices")
        return common.pop()

    def intersection_sizes_ok(self) -> bool:
        sets = [set(vs) for vs in self.line_vertices]
        return all(len(a & b) == 1 for a, b in combinations(sets, 2))

    def is_partition(self) -> bool:
        all_edges = [e for es in self.line_edges for e in es]
        return len(all_edges) == comb(self.n, 2) == len(set(all_edges))

    def relabel(self, vertex_perm) -> "LineRepresentation":
        """Vertex x renamed vertex_perm[x]; line i keeps index i."""
        line_vertices = tuple(tuple(sorted(int(vertex_perm[x]) for x in vs)) for vs in self.line_vertices)
        return LineRepresentation(n=self.n, q=self.q, line_vertices=line_vertices,
                                  line_edges=tuple(tuple(combinations(vs, 2)) for vs in line_vertices))


def realize(plane: ProjectivePlane) -> LineRepresentation:
    line_vertices = tuple(tuple(sorted(pts)) for pts in plane.incidence)
    line_edges = tuple(tuple(combinations(vs, 2)) for vs in line_vertices)
    return LineRepresentation(n=plane.n, q=plane.q, line_vertices=line_vertices, line_edges=line_edges)


def line_through(rep: LineRepresentation, u: int, v: int) -> int:
    return rep.line_through(u, v)
