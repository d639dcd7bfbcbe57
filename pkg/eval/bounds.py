"""
Analytic bounds on the connected-pseudoachromatic index of K_n.

    f_n(x) = n(n-1) / 2x                classes of size >= x fit in E(K_n)
    g_n(x) = (x+1)(n - x - 1/2)         classes a size-x tree class can meet
    theorem1_bound(n) = floor(max_x min{f_n(x), g_n(x)}), x natural
    x0 = sqrt(n/2 + 1/16) - 1/4         real crossing point of f_n and g_n
    theorem2_value(n) = g_n(x0) = (n-1)(sqrt(n/2 + 1/16) + 1/4)

The integer bound is evaluated in exact rationals; floats are only used for
x0 and the closed form of g_n(x0).

Usage:
    python -m eval.bounds --range 7..21 --csv
"""
from __future__ import annotations

import argparse
import math
from dataclasses import asdict, dataclass
from fractions import Fraction

import pandas as pd
from scipy.optimize import brentq

from errors import TooSmall
from geometry.galois_field import supported_orders

THEOREM1_MIN_N = 8


def f(n: int, x: int | Fraction) -> Fraction:
    return Fraction(n * (n - 1)) / (2 * Fraction(x))


def g(n: int, x: int | Fraction) -> Fraction:
    x = Fraction(x)
    return (x + 1) * (n - x - Fraction(1, 2))


def _min_fg(n: int, x: int) -> Fraction:
    return min(f(n, x), g(n, x))


def theorem1_argmax(n: int) -> tuple[int, Fraction]:
    """(x_star, max_x min{f_n(x), g_n(x)}) over natural x in [1, n], smallest x on ties.

    [1, n] suffices: g_n is a downward parabola with vertex below n/2 and is
    negative for x > n - 1/2, while f_n only decreases.
    """
    best_x, best = 1, _min_fg(n, 1)
    for x in range(2, n + 1):
        val = _min_fg(n, x)
        if val > best:
            best_x, best = x, val
    return best_x, best


def theorem1_bound(n: int) -> int:
    return math.floor(theorem1_argmax(n)[1])


def lemma1_x0(n: int) -> float:
    return math.sqrt(n / 2 + 1 / 16) - 1 / 4


def theorem2_value(n: int) -> float:
    return (n - 1) * (math.sqrt(n / 2 + 1 / 16) + 1 / 4)


def f_float(n: int, x: float) -> float:
    return n * (n - 1) / (2 * x)


def g_float(n: int, x: float) -> float:
    return (x + 1) * (n - x - 0.5)


def crossing_gap(n: int) -> float:
    """|f_n(x0) - g_n(x0)| / f_n(x0); ~0 when the closed form is right."""
    x0 = lemma1_x0(n)
    fx = f_float(n, x0)
    return abs(fx - g_float(n, x0)) / fx


def x0_numeric(n: int) -> float:
    """The first positive root of f_n - g_n found by Brent's method (n >= 4)."""
    if n < 4:
        return lemma1_x0(n)
    # f - g > 0 near 0 and < 0 at (n-1)/2 for n >= 4
    return brentq(lambda x: f_float(n, x) - g_float(n, x), 1e-9, (n - 1) / 2, xtol=1e-14, rtol=1e-15)


def best_connected_lower_bound(n: int) -> tuple[int, int]:
    """(q, ceil(q/2)(q^2+q+1)) for the largest supported prime power with q^2+q+1 <= n."""
    if n < 7:
        raise TooSmall(f"n={n}: the smallest plane (q=2) needs n >= 7")
    q = max(p for p in supported_orders() if p * p + p + 1 <= n)
    return q, -(-q // 2) * (q * q + q + 1)


def pseudoachromatic_upper_estimate(n: int) -> int:
    """Largest k <= C(n,2) with k - 1 <= 2(n-2) * floor(C(n,2)/k).

    The smallest class has at most C(n,2)/k edges and each of them touches
    2(n-2) other edges, so it can meet at most that many other classes.
    """
    m = n * (n - 1) // 2
    if n == 2:
        return 1
    return max(k for k in range(1, m + 1) if k - 1 <= 2 * (n - 2) * (m // k))


def search_upper_estimate(n: int, connected: bool) -> int:
    est = pseudoachromatic_upper_estimate(n)
    if connected and n >= THEOREM1_MIN_N:
        est = min(est, theorem1_bound(n))
    return est


@dataclass
class BoundReport:
    n: int
    x_star: int
    theorem1_bound: int
    x0: float
    theorem2_value: float
    best_lower_q: int | None
    best_lower: int | None
    theorem1_valid: bool

    @property
    def lower_ratio(self) -> float | None:
        return None if self.best_lower is None else self.best_lower / self.n ** 1.5

    @property
    def upper_ratio(self) -> float:
        return self.theorem2_value / self.n ** 1.5


def bound_report(n: int) -> BoundReport:
    if n < 2:
        raise TooSmall(f"n={n}: bounds need n >= 2")
    x_star, best = theorem1_argmax(n)
    try:
        q, lower = best_connected_lower_bound(n)
    except TooSmall:
        q, lower = None, None
    return BoundReport(n=n, x_star=x_star, theorem1_bound=math.floor(best), x0=lemma1_x0(n),
                       theorem2_value=theorem2_value(n), best_lower_q=q, best_lower=lower,
                       theorem1_valid=n >= THEOREM1_MIN_N)


def bounds_table(ns) -> pd.DataFrame:
    rows = []
    for n in ns:
        r = bound_report(n)
        row = asdict(r)
        row["lower_ratio"] = r.lower_ratio
        row["upper_ratio"] = r.upper_ratio
        rows.append(row)
    df = pd.DataFrame(rows, columns=["n", "theorem1_bound", "x_star", "x0", "theorem2_value",
                                     "best_lower_q", "best_lower", "lower_ratio", "upper_ratio",
                                     "theorem1_valid"])
    return df.astype({"best_lower_q": "Int64", "best_lower": "Int64"})


def parse_range(text: str) -> range:
    """'7..21' -> range(7, 22); a single integer -> that one n."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    return range(int(text), int(text) + 1)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--range", default="8..21", help="n or lo..hi (inclusive)")
    ap.add_argument("--csv", action="store_true", help="print CSV instead of a text table")
    args = ap.parse_args()
    df = bounds_table(parse_range(args.range))
    print(df.to_csv(index=False) if args.csv else df.to_string(index=False))


if __name__ == "__main__":
    main()
