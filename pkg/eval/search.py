"""
Exact pseudoachromatic / connected-pseudoachromatic index of K_n by
branch-and-bound over surjective edge colorings.

For each k from the bounds module's upper estimate downwards we decide whether
a complete (resp. complete + connected) surjective k-coloring exists:

  - edges are assigned in lexicographic order
  - with symmetry breaking, color c+1 may only appear after color c
  - a node is dropped when the unmet color pairs exceed
    (remaining edges) * min(2(n-2), k-1), or when fewer edges remain than
    colors not yet introduced
  - connected mode drops a node when some class can no longer be joined up,
    even using every still-uncolored edge, or when the colors owned or still
    placeable around the component it must stay in are too few to meet every
    other class

Feasibility is monotone in k (merging two classes that meet keeps both
properties), so the first feasible k is the index.

Usage:
    python -m eval.search --n 5 --mode connected
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field
from itertools import combinations

from joblib import Parallel, delayed

from colorings.constructions import (EdgeColoring, connected_coloring_best, extend_connected,
                                     theorem5_coloring)
from errors import BudgetExceeded, InternalConstructionFailure, SearchTooLarge, TooSmall
from eval.bounds import search_upper_estimate
from eval.verifier import check_complete, check_connected
from run_utils import resolve_n_jobs

MODES = ("pseudoachromatic", "connected")
MAX_EXACT_N = 5      # guaranteed to finish
MAX_SEARCH_N = 8     # beyond this the search refuses to start
_CLOCK_EVERY = 2048


@dataclass
class SearchConfig:
    n: int
    mode: str = "pseudoachromatic"
    time_budget: float = 60.0          # seconds over the whole descent; <= 0 means unlimited
    symmetry_breaking: bool = True
    n_jobs: int = 1
    verbose: bool = False

    def __post_init__(self):
        if self.n < 2:
            raise TooSmall(f"search needs n >= 2, got n={self.n}")
        if self.n > MAX_SEARCH_N:
            raise SearchTooLarge(f"search is limited to n <= {MAX_SEARCH_N}, got n={self.n}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")

    @property
    def connected(self) -> bool:
        return self.mode == "connected"


@dataclass
class SearchResult:
    n: int
    mode: str
    status: str                     # "exact" | "timeout"
    lower: int
    upper: int
    witness: EdgeColoring
    nodes: int = 0
    seconds: float = 0.0
    refuted: list[int] = field(default_factory=list)

    @property
    def value(self) -> int | tuple[int, int]:
        return self.lower if self.status == "exact" else (self.lower, self.upper)

    def summary(self) -> str:
        val = f"{self.lower}" if self.status == "exact" else f"[{self.lower}, {self.upper}]"
        return (f"n={self.n} mode={self.mode} status={self.status} value={val} "
                f"nodes={self.nodes} time={self.seconds:.2f}s")


class UnionFind:
    def __init__(self, size: int, parents: list[int] | None = None):
        self.parents = list(range(size)) if parents is None else list(parents)

    def find(self, x: int) -> int:
        root = x
        while root != self.parents[root]:
            root = self.parents[root]
        while x != root:
            self.parents[x], x = root, self.parents[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parents[rb] = ra


class _Search:
    """One feasibility question: is there a complete surjective k-coloring of K_n?"""

    def __init__(self, n: int, k: int, connected: bool, symmetry_breaking: bool, deadline: float | None):
        self.n, self.k = n, k
        self.connected = connected
        self.symmetry_breaking = symmetry_breaking
        self.deadline = deadline
        self.edges = list(combinations(range(n), 2))
        self.m = len(self.edges)
        self.max_new = max(0, min(2 * (n - 2), k - 1))
        self.total_pairs = k * (k - 1) // 2
        self.assign = [-1] * self.m
        self.class_edges: list[list[int]] = [[] for _ in range(k)]
        self.nodes = 0

    def _order(self, used_mask: int) -> list[int]:
        if not self.symmetry_breaking:
            return list(range(self.k))
        used = used_mask.bit_count()
        return ([used] if used < self.k else []) + list(range(used))

    def _step(self, idx: int, c: int, own: list[int], met: list[int], met_pairs: int, used_mask: int):
        a, b = self.edges[idx]
        bit = 1 << c
        own = own[:]
        own[a] |= bit
        own[b] |= bit
        new = (own[a] | own[b]) & ~bit & ~met[c]
        if new:
            met = met[:]
            met[c] |= new
            met_pairs += new.bit_count()
            d = 0
            rest = new
            while rest:
                if rest & 1:
                    met[d] |= bit
                rest >>= 1
                d += 1
        used_mask |= bit
        remaining = self.m - idx - 1
        if self.total_pairs - met_pairs > remaining * self.max_new:
            return None
        if self.k - used_mask.bit_count() > remaining:
            return None
        return own, met, met_pairs, used_mask

    def _joinable(self, idx: int, used_mask: int, own: list[int]) -> bool:
        """Every class can still become connected, and still meet every other class,
        using the uncolored edges idx+1..

        A connected class ends inside R, the component of its edges plus the
        uncolored edges. It can only meet colors already owned on R or placed
        later on an uncolored edge at R.
        """
        free = UnionFind(self.n)
        free_deg = [0] * self.n
        for e in range(idx + 1, self.m):
            a, b = self.edges[e]
            free.union(a, b)
            free_deg[a] += 1
            free_deg[b] += 1
        for c in range(self.k):
            if not (used_mask >> c) & 1:
                continue
            es = self.class_edges[c]
            uf = UnionFind(self.n, free.parents)
            for e in es:
                uf.union(*self.edges[e])
            root = uf.find(self.edges[es[0]][0])
            if any(uf.find(self.edges[e][0]) != root for e in es[1:]):
                return False
            seen, slack = 0, 0
            for v in range(self.n):
                if uf.find(v) == root:
                    seen |= own[v]
                    slack += free_deg[v]
            if (seen & ~(1 << c)).bit_count() + slack < self.k - 1:
                return False
        return True

    def _place(self, idx: int, c: int, own: list[int], used_mask: int) -> bool:
        self.assign[idx] = c
        self.class_edges[c].append(idx)
        if self.connected and not self._joinable(idx, used_mask, own):
            self._unplace(idx, c)
            return False
        return True

    def _unplace(self, idx: int, c: int) -> None:
        self.assign[idx] = -1
        self.class_edges[c].pop()

    def _tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % _CLOCK_EVERY == 0 and time.time() > self.deadline:
            raise BudgetExceeded(f"deadline reached after {self.nodes} nodes (n={self.n}, k={self.k})")

    def _dfs(self, idx: int, own, met, met_pairs: int, used_mask: int):
        if idx == self.m:
            return list(self.assign)
        self._tick()
        for c in self._order(used_mask):
            st = self._step(idx, c, own, met, met_pairs, used_mask)
            if st is None or not self._place(idx, c, st[0], st[3]):
                continue
            found = self._dfs(idx + 1, *st)
            if found is not None:
                return found
            self._unplace(idx, c)
        return None

    def run(self, prefix: tuple[int, ...] = ()):
        """Search below a fixed assignment of the first len(prefix) edges."""
        state = ([0] * self.n, [0] * self.k, 0, 0)
        for idx, c in enumerate(prefix):
            if c not in self._order(state[3]):
                return None
            st = self._step(idx, c, *state)
            if st is None or not self._place(idx, c, st[0], st[3]):
                return None
            state = st
        return self._dfs(len(prefix), *state)


def _solve_subtree(n, k, connected, symmetry_breaking, deadline, prefix):
    s = _Search(n, k, connected, symmetry_breaking, deadline)
    try:
        colors = s.run(prefix)
    except BudgetExceeded:
        return "timeout", None, s.nodes
    return ("found" if colors is not None else "refuted"), colors, s.nodes


def _prefixes(n: int, k: int, symmetry_breaking: bool, want: int) -> list[tuple[int, ...]]:
    """Color prefixes of the first edges in DFS order, at least `want` of them when possible."""
    probe = _Search(n, k, False, symmetry_breaking, None)
    level = [()]
    depth = 0
    while len(level) < want and depth < probe.m:
        nxt = []
        for p in level:
            mask = 0
            for c in p:
                mask |= 1 << c
            nxt += [p + (c,) for c in probe._order(mask)]
        level, depth = nxt, depth + 1
    return level


def decide(n: int, k: int, connected: bool = False, symmetry_breaking: bool = True,
           deadline: float | None = None, n_jobs: int = 1) -> tuple[str, list[int] | None, int]:
    """("found", colors, nodes) | ("refuted", None, nodes) | ("timeout", None, nodes)."""
    n_jobs = resolve_n_jobs(n_jobs)
    if n_jobs == 1:
        return _solve_subtree(n, k, connected, symmetry_breaking, deadline, ())
    prefixes = _prefixes(n, k, symmetry_breaking, 4 * n_jobs)
    nodes, timed_out = 0, False
    results = Parallel(n_jobs=n_jobs, return_as="generator")(
        delayed(_solve_subtree)(n, k, connected, symmetry_breaking, deadline, p) for p in prefixes)
    for status, colors, sub_nodes in results:
        nodes += sub_nodes
        if status == "found":
            return "found", colors, nodes
        timed_out |= status == "timeout"
    return ("timeout" if timed_out else "refuted"), None, nodes


def _to_coloring(n: int, k: int, colors: list[int], mode: str) -> EdgeColoring:
    color_of = {e: c + 1 for e, c in zip(combinations(range(n), 2), colors)}
    return EdgeColoring(n=n, k=k, color_of=color_of, provenance={"construction": "search", "mode": mode})


def _extended_smaller(n: int, connected: bool, n_jobs: int = 1) -> EdgeColoring:
    """Exact witness on K_{n-1} with vertex n-1 added; both properties carry over."""
    mode = "connected" if connected else "pseudoachromatic"
    res = exact_index(SearchConfig(n=n - 1, mode=mode, time_budget=0, n_jobs=n_jobs))
    return extend_connected(res.witness, n)


def fallback_witness(n: int, connected: bool, n_jobs: int = 1) -> EdgeColoring:
    """Best coloring known without searching K_n itself.

    Below n=7 that is a rainbow K_3 extended, or the exact K_{n-1} witness
    extended when n-1 is within the guaranteed search range.
    """
    if n == 2:
        return EdgeColoring(n=2, k=1, color_of={(0, 1): 1}, provenance={"construction": "trivial"})
    if n < 7:
        rainbow = EdgeColoring(n=3, k=3, color_of={(0, 1): 1, (0, 2): 2, (1, 2): 3},
                               provenance={"construction": "rainbow-K3"})
        best = extend_connected(rainbow, n)
    else:
        best = connected_coloring_best(n)
        if not connected:
            # extending keeps completeness (ownership only grows)
            q = max(q for q in (2, 4, 8) if q * q + q + 1 <= n)
            t5 = extend_connected(theorem5_coloring(q), n)
            if t5.k > best.k:
                best = t5
    if n - 1 <= MAX_EXACT_N < n:
        smaller = _extended_smaller(n, connected, n_jobs)
        if smaller.k > best.k:
            best = smaller
    return best


def _checked(witness: EdgeColoring, connected: bool) -> EdgeColoring:
    ok, pair = check_complete(witness)
    if not ok:
        raise InternalConstructionFailure(f"search witness is not complete, colors {pair} never meet")
    if connected:
        ok, c = check_connected(witness)
        if not ok:
            raise InternalConstructionFailure(f"search witness class {c} is disconnected")
    return witness


def exact_index(config: SearchConfig) -> SearchResult:
    n, connected = config.n, config.connected
    t0 = time.time()
    deadline = t0 + config.time_budget if config.time_budget > 0 else None
    upper = search_upper_estimate(n, connected)
    floor = fallback_witness(n, connected, n_jobs=config.n_jobs)
    refuted: list[int] = []
    nodes = 0
    if config.verbose:
        print(f"[INFO] n={n} mode={config.mode}: upper estimate {upper}, constructions give {floor.k}")

    for k in range(upper, 0, -1):
        if floor.k >= k:
            # every larger k is refuted, and a construction already reaches k
            return SearchResult(n, config.mode, "exact", k, k, _checked(floor, connected),
                                nodes, time.time() - t0, refuted)
        status, colors, sub_nodes = decide(n, k, connected, config.symmetry_breaking, deadline, config.n_jobs)
        nodes += sub_nodes
        if config.verbose:
            print(f"[INFO]   k={k}: {status} ({sub_nodes} nodes)")
        if status == "found":
            witness = _checked(_to_coloring(n, k, colors, config.mode), connected)
            return SearchResult(n, config.mode, "exact", k, k, witness, nodes, time.time() - t0, refuted)
        if status == "timeout":
            return SearchResult(n, config.mode, "timeout", floor.k, k, _checked(floor, connected),
                                nodes, time.time() - t0, refuted)
        refuted.append(k)
    raise InternalConstructionFailure(f"no k >= 1 feasible for n={n}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--mode", choices=MODES, default="pseudoachromatic")
    ap.add_argument("--budget", type=float, default=60.0)
    ap.add_argument("--n_jobs", type=int, default=1)
    args = ap.parse_args()
    res = exact_index(SearchConfig(n=args.n, mode=args.mode, time_budget=args.budget,
                                   n_jobs=args.n_jobs, verbose=True))
    print(res.summary())


if __name__ == "__main__":
    main()
