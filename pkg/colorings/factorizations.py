"""
Classical decompositions of small complete graphs on vertices 0..m-1:

  one_factorize(m)               circle (round-robin) method, m even
  hamiltonian_decompose(m)       Walecki zigzag cycles, m odd
  one_factorize_containing(m, M) circle method relabelled so M is factor 0

Factors are tuples of canonical (min, max) edges in ascending order; factor
order is the rotation index.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from errors import EvenOrder, NotPerfectMatching, OddOrder
from geometry.representation import Edge, canon

Matching = tuple[Edge, ...]


@dataclass(frozen=True)
class OneFactorization:
    m: int
    factors: tuple[Matching, ...]

    def is_valid(self) -> bool:
        if len(self.factors) != self.m - 1:
            return False
        seen: set[Edge] = set()
        for f in self.factors:
            if not is_perfect_matching(self.m, f):
                return False
            if seen & set(f):
                return False
            seen |= set(f)
        return len(seen) == self.m * (self.m - 1) // 2


@dataclass(frozen=True)
class HamiltonianDecomposition:
    m: int
    cycles: tuple[tuple[int, ...], ...]

    def cycle_edges(self, i: int) -> tuple[Edge, ...]:
        c = self.cycles[i]
        return tuple(sorted(canon(c[j], c[(j + 1) % len(c)]) for j in range(len(c))))

    def is_valid(self) -> bool:
        if len(self.cycles) != (self.m - 1) // 2:
            return False
        seen: set[Edge] = set()
        for i, c in enumerate(self.cycles):
            if sorted(c) != list(range(self.m)):
                return False
            es = set(self.cycle_edges(i))
            if len(es) != self.m or seen & es:
                return False
            seen |= es
        return len(seen) == self.m * (self.m - 1) // 2


def is_perfect_matching(m: int, edges: Iterable[Sequence[int]]) -> bool:
    covered: list[int] = []
    for u, v in edges:
        if u == v:
            return False
        covered += [u, v]
    return sorted(covered) == list(range(m))


def _round(m: int, r: int) -> Matching:
    # fixed vertex 0, the others rotate by r positions
    rotated = list(range(1, m))
    rotated = rotated[r:] + rotated[:r]
    order = [0] + rotated
    return tuple(sorted(canon(order[i], order[m - 1 - i]) for i in range(m // 2)))


def one_factorize(m: int) -> OneFactorization:
    if m < 2 or m % 2:
        raise OddOrder(f"a 1-factorization needs an even order >= 2, got m={m}")
    return OneFactorization(m=m, factors=tuple(_round(m, r) for r in range(m - 1)))


def _normalize_cycle(seq: list[int]) -> tuple[int, ...]:
    i = seq.index(min(seq))
    c = seq[i:] + seq[:i]
    if len(c) > 2 and c[1] > c[-1]:
        c = [c[0]] + c[1:][::-1]
    return tuple(c)


def hamiltonian_decompose(m: int) -> HamiltonianDecomposition:
    if m < 3 or m % 2 == 0:
        raise EvenOrder(f"a Hamiltonian decomposition needs an odd order >= 3, got m={m}")
    h = (m - 1) // 2
    hub = m - 1  # Walecki's point at infinity; the rest are residues mod 2h
    cycles = []
    for i in range(h):
        zigzag = [i]
        for t in range(1, h + 1):
            zigzag.append((i + t) % (2 * h))
            if t < h:
                zigzag.append((i - t) % (2 * h))
        cycles.append(_normalize_cycle([hub] + zigzag))
    return HamiltonianDecomposition(m=m, cycles=tuple(cycles))


def one_factorize_containing(m: int, M: Iterable[Sequence[int]]) -> OneFactorization:
    M = tuple(sorted(canon(u, v) for u, v in M))
    if m % 2:
        raise OddOrder(f"m={m} is odd")
    if not is_perfect_matching(m, M):
        raise NotPerfectMatching(f"{list(M)} is not a perfect matching of K_{m}")
    base = one_factorize(m)
    sigma: dict[int, int] = {}
    for (a, b), (c, d) in zip(base.factors[0], M):
        sigma[a], sigma[b] = c, d
    factors = tuple(tuple(sorted(canon(sigma[u], sigma[v]) for u, v in f)) for f in base.factors)
    return OneFactorization(m=m, factors=factors)


def all_edges(m: int) -> list[Edge]:
    return list(combinations(range(m), 2))
