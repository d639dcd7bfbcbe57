from __future__ import annotations

import io
import math
from fractions import Fraction

import pandas as pd
import pytest

from errors import TooSmall
from eval.bounds import (best_connected_lower_bound, bound_report, bounds_table, crossing_gap, f, g,
                         lemma1_x0, parse_range, pseudoachromatic_upper_estimate, search_upper_estimate,
                         theorem1_argmax, theorem1_bound, theorem2_value, x0_numeric)
from eval.table_check import TABLE1, TABLE2


def test_f_g_exact():
    assert f(8, 2) == Fraction(14)
    assert g(8, 2) == Fraction(33, 2)


def test_theorem1_n8():
    assert theorem1_bound(8) == 14
    assert theorem1_argmax(8) == (2, Fraction(14))


def test_theorem1_ties_take_smallest_x():
    for n in range(8, 60):
        x, best = theorem1_argmax(n)
        assert all(min(f(n, y), g(n, y)) < best for y in range(1, x))


def test_theorem1_above_connected_table_value():
    assert theorem1_bound(7) >= TABLE1[7]


@pytest.mark.parametrize("n", range(8, 301))
def test_crossing_point_closed_form(n):
    assert crossing_gap(n) < 1e-9


@pytest.mark.parametrize("n", [4, 8, 50, 300])
def test_crossing_point_numeric(n):
    assert x0_numeric(n) == pytest.approx(lemma1_x0(n), rel=1e-9)


def test_theorem2_value_is_g_at_x0():
    for n in (8, 21, 100):
        x0 = lemma1_x0(n)
        assert theorem2_value(n) == pytest.approx((x0 + 1) * (n - x0 - 0.5), rel=1e-12)


def test_upper_constant():
    n = 10 ** 6
    assert theorem2_value(n) / n ** 1.5 == pytest.approx(1 / math.sqrt(2), rel=0.02)


def test_best_lower():
    assert best_connected_lower_bound(7) == (2, 7)
    assert best_connected_lower_bound(12) == (2, 7)
    assert best_connected_lower_bound(13) == (3, 26)
    assert best_connected_lower_bound(21) == (4, 42)
    with pytest.raises(TooSmall):
        best_connected_lower_bound(6)


def test_bound_consistency_sweep():
    for n in range(8, 301):
        assert theorem1_bound(n) >= best_connected_lower_bound(n)[1]


def test_upper_estimates_cover_tables():
    assert pseudoachromatic_upper_estimate(5) == 7
    for n, val in TABLE2.items():
        assert pseudoachromatic_upper_estimate(n) >= val
    for n, val in TABLE1.items():
        assert search_upper_estimate(n, connected=True) >= val
    assert search_upper_estimate(8, connected=True) == min(14, pseudoachromatic_upper_estimate(8))


def test_bound_report_small_n():
    r = bound_report(5)
    assert r.best_lower is None and r.lower_ratio is None
    assert not r.theorem1_valid


def test_bounds_table_rows_and_csv():
    df = bounds_table(parse_range("7..21"))
    assert len(df) == 15
    assert list(df.columns[:7]) == ["n", "theorem1_bound", "x_star", "x0", "theorem2_value",
                                    "best_lower_q", "best_lower"]
    back = pd.read_csv(io.StringIO(df.to_csv(index=False)))
    assert len(back) == 15
    row8 = df[df.n == 8].iloc[0]
    assert row8.theorem1_bound == 14
    row13 = df[df.n == 13].iloc[0]
    assert (row13.best_lower_q, row13.best_lower) == (3, 26)
    assert (df.lower_ratio <= df.upper_ratio).all()


def test_parse_range():
    assert list(parse_range("3..5")) == [3, 4, 5]
    assert list(parse_range("8")) == [8]
