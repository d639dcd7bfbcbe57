"""
Exact arithmetic in GF(p^k) for the prime powers the plane builder supports.

Elements are plain ints encoding the coefficient vector of a residue
polynomial in base p (value = c_0 + c_1 p + ... + c_{k-1} p^{k-1}), so the
canonical order of elements is the integer order. Scalar operations are
table-free and O(k); `FieldContext.add_table` / `mul_table` are derived from
them once and used by the vectorised incidence computation in
projective_plane.py.

Usage:
    from geometry.galois_field import make_field
    F = make_field(8)
    F.mul(3, F.inv(3))   # -> 1
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

import numpy as np

from errors import FieldMismatch, NotAPrimePower, UnsupportedOrder, ZeroInverse

MAX_SUPPORTED_ORDER = 32

# (p, k) -> monic reduction polynomial, coefficients low -> high (length k+1).
# k == 1 is the prime field itself; its "polynomial" is x.
IRREDUCIBLE_POLYS: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),          # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),       # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),    # x^4 + x + 1
    (2, 5): (1, 0, 1, 0, 0, 1), # x^5 + x^2 + 1
    (3, 2): (1, 0, 1),          # x^2 + 1
    (3, 3): (1, 2, 0, 1),       # x^3 + 2x + 1
    (5, 2): (2, 0, 1),          # x^2 + 2
}


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q == p**k, by trial division."""
    if q < 2:
        raise NotAPrimePower(f"q={q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise NotAPrimePower(f"q={q} has at least two distinct prime factors ({p} and {rest})")
    return p, k


def is_prime_power(q: int) -> bool:
    try:
        factor_prime_power(q)
    except NotAPrimePower:
        return False
    return True


def supported_orders() -> list[int]:
    return [q for q in range(2, MAX_SUPPORTED_ORDER + 1) if is_prime_power(q)]


# ---------------------------------------------------------------------------
# Polynomial helpers over GF(p) (coefficient tuples, low -> high)
# ---------------------------------------------------------------------------

def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: list[int], m: tuple[int, ...], p: int) -> list[int]:
    a = _poly_trim(list(a))
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        coef = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * mc) % p
        _poly_trim(a)
    return a


def is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(poly) - 1
    if deg < 1 or poly[-1] % p == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_mod(list(poly), tuple(low) + (1,), p):
                return False
    return True


# ---------------------------------------------------------------------------
# Field context
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldContext:
    p: int
    k: int
    reduction_polynomial: tuple[int, ...] = field(default=(0, 1))

    @property
    def q(self) -> int:
        return self.p ** self.k

    def __repr__(self) -> str:
        return f"GF({self.q})[{self.poly_str()}]"

    def poly_str(self) -> str:
        terms = []
        for i in range(len(self.reduction_polynomial) - 1, -1, -1):
            c = self.reduction_polynomial[i]
            if c == 0:
                continue
            mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(mono if (c == 1 and i > 0) else (f"{c}{mono}" if i > 0 else str(c)))
        return " + ".join(terms)

    # --- encoding -----------------------------------------------------------

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, c: list[int]) -> int:
        v = 0
        for d in reversed(c):
            v = v * self.p + d
        return v

    def elements(self) -> range:
        return range(self.q)

    def _check(self, *xs: int) -> None:
        for x in xs:
            if not 0 <= x < self.q:
                raise FieldMismatch(f"{x} is not an element of GF({self.q})")

    # --- arithmetic -------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        self._check(a, b)
        if self.k == 1:
            return (a + b) % self.p
        return self.from_digits([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        self._check(a)
        if self.k == 1:
            return (-a) % self.p
        return self.from_digits([(-x) % self.p for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a, b)
        if self.k == 1:
            return (a * b) % self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        red = _poly_mod(prod, self.reduction_polynomial, self.p)
        return self.from_digits(red + [0] * (self.k - len(red)))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroInverse(f"0 has no inverse in GF({self.q})")
        # a^(q-2) = a^-1 in the multiplicative group of order q-1
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def order(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("0 has no multiplicative order")
        x, n = a, 1
        while x != 1:
            x = self.mul(x, a)
            n += 1
        return n

    def generator(self) -> int:
        """Smallest element of multiplicative order q-1."""
        return next(a for a in range(1, self.q) if self.order(a) == self.q - 1)

    # --- derived tables -----------------------------------------------------

    @cached_property
    def add_table(self) -> np.ndarray:
        return np.array([[self.add(a, b) for b in range(self.q)] for a in range(self.q)], dtype=np.int64)

    @cached_property
    def mul_table(self) -> np.ndarray:
        return np.array([[self.mul(a, b) for b in range(self.q)] for a in range(self.q)], dtype=np.int64)

    def verify(self, distributivity_limit: int = 16) -> list[str]:
        """Exhaustive field-axiom check. Returns the failures (empty when valid).

        Distributivity is exhaustive up to `distributivity_limit` and sampled on
        a stride above it.
        """
        A, M, q = self.add_table, self.mul_table, self.q
        failures: list[str] = []
        if not np.array_equal(A, A.T):
            failures.append("addition is not commutative")
        if not np.array_equal(M, M.T):
            failures.append("multiplication is not commutative")
        idx = np.arange(q)
        for name, T in (("addition", A), ("multiplication", M)):
            # T[T[a, b], c] == T[a, T[b, c]] for all a, b, c
            left = T[T[idx[:, None], idx[None, :]][:, :, None], idx[None, None, :]]
            right = T[idx[:, None, None], T[idx[:, None], idx[None, :]][None, :, :]]
            if not np.array_equal(left, right):
                failures.append(f"{name} is not associative")
        if not np.all(A[0] == idx) or not np.all(M[1] == idx):
            failures.append("0 / 1 are not identities")
        for a in range(1, q):
            if 1 not in M[a]:
                failures.append(f"{a} has no multiplicative inverse")
        stride = 1 if q <= distributivity_limit else 3
        sample = idx[::stride]
        for a in sample:
            lhs = M[a][A[sample[:, None], sample[None, :]]]
            rhs = A[M[a][sample][:, None], M[a][sample][None, :]]
            if not np.array_equal(lhs, rhs):
                failures.append(f"distributivity fails for a={a}")
                break
        return failures


@dataclass(frozen=True)
class FieldElement:
    field: FieldContext
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise FieldMismatch(f"{self.value} is not reduced in GF({self.field.q})")

    def __add__(self, other: FieldElement) -> FieldElement:
        return add(self, other)

    def __mul__(self, other: FieldElement) -> FieldElement:
        return mul(self, other)

    def __repr__(self) -> str:
        return f"{self.value}@GF({self.field.q})"


def _same_field(a: FieldElement, b: FieldElement) -> FieldContext:
    if a.field != b.field:
        raise FieldMismatch(f"operands from {a.field!r} and {b.field!r}")
    return a.field


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    F = _same_field(a, b)
    return FieldElement(F, F.add(a.value, b.value))


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    F = _same_field(a, b)
    return FieldElement(F, F.mul(a.value, b.value))


def inv(a: FieldElement) -> FieldElement:
    return FieldElement(a.field, a.field.inv(a.value))


def make_field(q: int) -> FieldContext:
    p, k = factor_prime_power(q)
    if q > MAX_SUPPORTED_ORDER:
        raise UnsupportedOrder(f"GF({q}) is beyond the supported maximum {MAX_SUPPORTED_ORDER}")
    if k == 1:
        return FieldContext(p=p, k=1, reduction_polynomial=(0, 1))
    poly = IRREDUCIBLE_POLYS.get((p, k))
    if poly is None:
        raise UnsupportedOrder(f"no reduction polynomial tabulated for GF({p}^{k})")
    return FieldContext(p=p, k=k, reduction_polynomial=poly)
