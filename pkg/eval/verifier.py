"""
Independent checks on a total edge-coloring of K_n.

Only the edge -> color map is trusted; everything else (ownership, completeness,
class connectivity, per-line palette ownership) is recomputed from it.

Completeness uses one bitset per color: met[c] is the OR of the packed
owned-color rows of every vertex that owns c, so the pair (c, d) is met iff
bit d of met[c] is set.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from math import comb

import numpy as np
import pandas as pd
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from colorings.constructions import ColorPartition, EdgeColoring
from errors import PartialColoringError
from geometry.representation import LineRepresentation
from run_utils import resolve_n_jobs, run_jobs


@dataclass
class VerifyConfig:
    require_connected: bool = False
    check_lemma2: bool = True
    n_jobs: int = 1
    verbose: bool = False


@dataclass
class VerifyReport:
    n: int
    k: int
    complete: bool
    complete_witness: tuple[int, int] | None
    connected: bool
    connected_witness: int | None
    class_size_histogram: dict[int, int]
    lemma2_premise: bool | None = None
    lemma2_witness: tuple[int, int, int] | None = None   # (line, vertex, color)
    discrepancy: str | None = None
    owners: list[frozenset] = field(default_factory=list, repr=False)

    def passed(self, require_connected: bool = False) -> bool:
        ok = self.complete and self.discrepancy is None
        return ok and (self.connected or not require_connected)

    def to_dict(self, include_owners: bool = False) -> dict:
        d = asdict(self)
        d.pop("owners")
        d["class_size_histogram"] = {str(s): c for s, c in self.class_size_histogram.items()}
        if include_owners:
            d["owners"] = [sorted(o) for o in self.owners]
        return d

    def to_json(self, include_owners: bool = False) -> str:
        return json.dumps(self.to_dict(include_owners), indent=2, sort_keys=True)

    def summary_lines(self) -> list[str]:
        hist = ", ".join(f"{s}:{c}" for s, c in sorted(self.class_size_histogram.items()))
        lines = [
            f"n={self.n}  k={self.k}",
            f"complete      : {'PASS' if self.complete else 'FAIL'}"
            + ("" if self.complete else f"  colors {self.complete_witness} never meet"),
            f"connected     : {'PASS' if self.connected else 'FAIL'}"
            + ("" if self.connected else f"  class {self.connected_witness} is disconnected"),
        ]
        if self.lemma2_premise is not None:
            w = self.lemma2_witness
            lines.append(f"line ownership: {'PASS' if self.lemma2_premise else 'FAIL'}"
                         + ("" if self.lemma2_premise else
                            f"  line {w[0]} vertex {w[1]} misses color {w[2]}"))
        lines.append(f"class sizes   : {{{hist}}}")
        if self.discrepancy:
            lines.append(f"[ERROR] {self.discrepancy}")
        return lines


def _require_total(coloring: EdgeColoring) -> None:
    n, k = coloring.n, coloring.k
    if len(coloring.color_of) != comb(n, 2):
        raise PartialColoringError(f"{comb(n, 2) - len(coloring.color_of)} of {comb(n, 2)} edges uncolored")
    for (u, v), c in coloring.color_of.items():
        if not (0 <= u < v < n):
            raise PartialColoringError(f"edge {(u, v)} is not a canonical edge of K_{n}")
        if not (1 <= c <= k):
            raise PartialColoringError(f"edge {(u, v)} has color {c} outside [1, {k}]")


def ownership_matrix(coloring: EdgeColoring) -> np.ndarray:
    """Boolean (n, k) matrix: row v, column c-1 set iff v is incident to an edge of color c."""
    own = np.zeros((coloring.n, coloring.k), dtype=bool)
    if coloring.color_of:
        edges = np.array(list(coloring.color_of.keys()), dtype=np.int64)
        colors = np.fromiter(coloring.color_of.values(), dtype=np.int64) - 1
        own[edges[:, 0], colors] = True
        own[edges[:, 1], colors] = True
    return own


def owners_of(coloring: EdgeColoring, vertex: int) -> frozenset:
    return frozenset(c for (u, v), c in coloring.color_of.items() if vertex in (u, v))


def is_owner(coloring: EdgeColoring, subgraph, colors) -> bool:
    """Every vertex of `subgraph` (an iterable of vertices) owns every color in `colors`."""
    colors = set(colors)
    return all(colors <= owners_of(coloring, v) for v in subgraph)


def _met_chunk(own: np.ndarray, packed: np.ndarray, rows: range) -> np.ndarray:
    met = np.zeros((own.shape[1], packed.shape[1]), dtype=np.uint8)
    for v in rows:
        owned = np.flatnonzero(own[v])
        met[owned] |= packed[v]
    return met


def check_complete(coloring: EdgeColoring, n_jobs: int = 1) -> tuple[bool, tuple[int, int] | None]:
    """(True, None), or (False, lexicographically first pair of colors that never meet)."""
    _require_total(coloring)
    k = coloring.k
    if k < 2:
        return True, None
    own = ownership_matrix(coloring)
    packed = np.packbits(own, axis=1)
    n_jobs = resolve_n_jobs(n_jobs)
    chunks = np.array_split(np.arange(coloring.n), n_jobs)
    parts = run_jobs(_met_chunk, [(own, packed, range(int(c[0]), int(c[-1]) + 1)) for c in chunks if len(c)],
                     n_jobs=n_jobs)
    met = np.bitwise_or.reduce(np.stack(parts), axis=0)
    met = np.unpackbits(met, axis=1, count=k).astype(bool)
    np.fill_diagonal(met, True)
    bad = np.argwhere(~met)
    if len(bad) == 0:
        return True, None
    # met is symmetric, so the first row-major hit has i < j
    i, j = bad[0]
    return False, (int(i) + 1, int(j) + 1)


def check_connected(coloring: EdgeColoring) -> tuple[bool, int | None]:
    """(True, None), or (False, smallest color whose class is empty or disconnected)."""
    _require_total(coloring)
    for c, edges in coloring.color_classes().items():
        if not edges:
            return False, c
        arr = np.array(edges, dtype=np.int64)
        verts, local = np.unique(arr, return_inverse=True)
        local = local.reshape(arr.shape)
        graph = csr_matrix((np.ones(len(arr)), (local[:, 0], local[:, 1])), shape=(len(verts), len(verts)))
        n_comp, _ = connected_components(graph, directed=False)
        if n_comp != 1:
            return False, c
    return True, None


def check_lemma2_premise(coloring: EdgeColoring, rep: LineRepresentation,
                         partition: ColorPartition) -> tuple[bool, tuple[int, int, int] | None]:
    """Every line owns its palette. Witness: (line, vertex, color) of the first miss."""
    own = ownership_matrix(coloring)
    for cls, line in zip(partition.classes, partition.owner_lines):
        vs = rep.line_vertices[line]
        block = own[np.ix_(vs, [c - 1 for c in cls])]
        if not block.all():
            r, col = np.argwhere(~block)[0]
            return False, (int(line), int(vs[r]), int(cls[col]))
    return True, None


def class_size_histogram(coloring: EdgeColoring) -> dict[int, int]:
    """{class size: number of classes of that size}, empty classes included."""
    counts = pd.Series(coloring.class_sizes()).value_counts().sort_index()
    return {int(s): int(c) for s, c in counts.items()}


def verify(coloring: EdgeColoring, rep: LineRepresentation | None = None,
           partition: ColorPartition | None = None, config: VerifyConfig | None = None) -> VerifyReport:
    cfg = config or VerifyConfig()
    complete, cw = check_complete(coloring, n_jobs=cfg.n_jobs)
    connected, kw = check_connected(coloring)
    own = ownership_matrix(coloring)
    report = VerifyReport(
        n=coloring.n, k=coloring.k, complete=complete, complete_witness=cw,
        connected=connected, connected_witness=kw,
        class_size_histogram=class_size_histogram(coloring),
        owners=[frozenset(int(c) + 1 for c in np.flatnonzero(row)) for row in own],
    )
    partition = partition or coloring.partition
    if cfg.check_lemma2 and rep is not None and partition is not None:
        report.lemma2_premise, report.lemma2_witness = check_lemma2_premise(coloring, rep, partition)
        if report.lemma2_premise and not complete:
            report.discrepancy = f"every line owns its palette but colors {cw} never meet"
    if cfg.verbose:
        for line in report.summary_lines():
            print(f"[INFO] {line}")
    return report
