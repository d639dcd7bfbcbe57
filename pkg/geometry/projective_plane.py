"""
The algebraic projective plane PG(2, q) built over a FieldContext.

Points and lines are normalised homogeneous triples (first nonzero coordinate
is 1), sorted lexicographically, so indices are stable run to run. A point x
lies on a line l iff x . l == 0 in GF(q). The incidence matrix is computed in
one vectorised pass over the field's add/mul tables.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

import numpy as np

from geometry.galois_field import FieldContext


def normalized_triples(F: FieldContext) -> list[tuple[int, int, int]]:
    """Every projective point of PG(2, q) once, first nonzero coordinate 1."""
    out = []
    for t in product(range(F.q), repeat=3):
        first = next((c for c in t if c != 0), None)
        if first == 1:
            out.append(t)
    return sorted(out)


@dataclass(frozen=True)
class ProjectivePlane:
    q: int
    points: tuple[tuple[int, int, int], ...]
    lines: tuple[tuple[int, int, int], ...]
    incidence: tuple[tuple[int, ...], ...]  # per line, sorted point indices
    field: FieldContext | None = None

    @property
    def n(self) -> int:
        return len(self.points)

    def dump(self) -> str:
        """One text line per plane line listing its point indices."""
        return "\n".join(" ".join(str(p) for p in pts) for pts in self.incidence) + "\n"

    def incidence_matrix(self) -> np.ndarray:
        """(n_lines, n_points) boolean matrix rebuilt from the index lists."""
        m = np.zeros((len(self.incidence), len(self.points)), dtype=bool)
        for i, pts in enumerate(self.incidence):
            m[i, list(pts)] = True
        return m

    def lines_through(self, point: int) -> list[int]:
        return [i for i, pts in enumerate(self.incidence) if point in pts]


def build_plane(F: FieldContext) -> ProjectivePlane:
    triples = normalized_triples(F)
    P = np.array(triples, dtype=np.int64)
    A, M = F.add_table, F.mul_table
    # dot[l, x] = l0*x0 + l1*x1 + l2*x2 over GF(q), for every (line, point) pair
    dot = M[P[:, None, 0], P[None, :, 0]]
    dot = A[dot, M[P[:, None, 1], P[None, :, 1]]]
    dot = A[dot, M[P[:, None, 2], P[None, :, 2]]]
    incidence = tuple(tuple(int(x) for x in np.flatnonzero(row == 0)) for row in dot)
    pts = tuple(triples)
    return ProjectivePlane(q=F.q, points=pts, lines=pts, incidence=incidence, field=F)


# ---------------------------------------------------------------------------
# Axiom validation
# ---------------------------------------------------------------------------

@dataclass
class AxiomResult:
    name: str
    passed: bool
    witness: tuple | None = None

    def line(self) -> str:
        status = "pass" if self.passed else f"FAIL (witness {self.witness})"
        return f"  {self.name:<28s} {status}"


@dataclass
class ValidationReport:
    q: int
    n_points: int
    n_lines: int
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def get(self, name: str) -> AxiomResult:
        return next(r for r in self.results if r.name == name)

    def summary_lines(self) -> list[str]:
        head = f"[INFO] PG(2,{self.q}): {self.n_points} points, {self.n_lines} lines"
        return [head] + [r.line() for r in self.results]


def _first_pair_failure(sets: list[frozenset], n_items: int) -> tuple[int, int] | None:
    """First (a, b) with a < b not covered by exactly one of `sets`."""
    count = np.zeros((n_items, n_items), dtype=np.int64)
    for s in sets:
        idx = np.array(sorted(s), dtype=np.int64)
        count[np.ix_(idx, idx)] += 1
    iu = np.triu_indices(n_items, k=1)
    bad = np.flatnonzero(count[iu] != 1)
    if bad.size == 0:
        return None
    return int(iu[0][bad[0]]), int(iu[1][bad[0]])


def _first_general_quadruple(n_items: int, collinear) -> tuple[int, int, int, int] | None:
    for a, b in combinations(range(n_items), 2):
        for c in range(b + 1, n_items):
            if collinear(a, b, c):
                continue
            for d in range(c + 1, n_items):
                if not (collinear(a, b, d) or collinear(a, c, d) or collinear(b, c, d)):
                    return a, b, c, d
    return None


def validate_axioms(plane: ProjectivePlane) -> ValidationReport:
    n_pts, n_lines, q = len(plane.points), len(plane.incidence), plane.q
    report = ValidationReport(q=q, n_points=n_pts, n_lines=n_lines)

    line_sets = [frozenset(pts) for pts in plane.incidence]
    point_sets = [frozenset(i for i, s in enumerate(line_sets) if p in s) for p in range(n_pts)]

    # Axiom 1: two points, one line. Pairs of points covered by line sets.
    w1 = _first_pair_failure(line_sets, n_pts)
    report.results.append(AxiomResult("two points, one line", w1 is None, w1))

    # Axiom 2: two lines meet in exactly one point.
    w2 = _first_pair_failure(point_sets, n_lines)
    report.results.append(AxiomResult("two lines, one point", w2 is None, w2))

    # Axiom 3: four points, no three collinear. Lexicographically first such quadruple.
    def collinear(a: int, b: int, c: int) -> bool:
        return any(c in line_sets[i] for i in point_sets[a] & point_sets[b])

    w3 = _first_general_quadruple(n_pts, collinear)
    report.results.append(AxiomResult("four points in general pos.", w3 is not None, w3))

    sizes_ok = (n_pts == n_lines == q * q + q + 1
                and all(len(s) == q + 1 for s in line_sets)
                and all(len(s) == q + 1 for s in point_sets))
    bad_line = next((i for i, s in enumerate(line_sets) if len(s) != q + 1), None)
    report.results.append(AxiomResult("q+1 points/line, lines/point", sizes_ok,
                                      None if sizes_ok else ("line", bad_line)))

    total_from_lines = sum(len(s) for s in line_sets)
    total_from_points = sum(len(s) for s in point_sets)
    counting_ok = total_from_lines == total_from_points == (q + 1) * n_pts
    report.results.append(AxiomResult("incidence counting identity", counting_ok,
                                      None if counting_ok else (total_from_lines, total_from_points)))
    return report


def without_incidence(plane: ProjectivePlane, line: int, point: int) -> ProjectivePlane:
    """Copy of `plane` with one (line, point) incidence removed."""
    inc = list(plane.incidence)
    inc[line] = tuple(p for p in inc[line] if p != point)
    return ProjectivePlane(q=plane.q, points=plane.points, lines=plane.lines,
                           incidence=tuple(inc), field=plane.field)
